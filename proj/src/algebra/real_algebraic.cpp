#include "rootlog/real_algebraic.hpp"

#include <algorithm>

#include "rootlog/error.hpp"
#include "rootlog/factor.hpp"
#include "rootlog/resultant.hpp"
#include "rootlog/roots.hpp"

namespace rootlog {

namespace {

bool isolates_one(const Poly& sf, const std::vector<Poly>& seq, const Rational& lo, const Rational& hi) {
  if (lo >= hi) return false;
  if (is_zero(sf.eval<Rational>(lo)) || is_zero(sf.eval<Rational>(hi))) return false;
  return sturm_count(seq, lo, hi) == 1;
}

template <class Combine>
RealAlgebraic combine_by_resultant(const RealAlgebraic& a, const RealAlgebraic& b, const Poly& R, Combine box) {
  Poly sf = square_free_part(R);
  auto seq = sturm_sequence(sf);
  Rational w = std::max(a.interval().second - a.interval().first, b.interval().second - b.interval().first);
  for (int iter = 0; iter < 4000; ++iter) {
    auto ia = a.interval(w);
    auto ib = b.interval(w);
    auto [lo, hi] = box(ia, ib);
    if (isolates_one(sf, seq, lo, hi)) return RealAlgebraic::root_of(sf, lo, hi);
    w /= 2;
  }
  throw Error("real algebraic arithmetic failed to isolate the result");
}

}  // namespace

RealAlgebraic::RealAlgebraic(const Rational& q) : minpoly_(primitive_part(Poly{Rational(-q), Rational(1)})), lo_(q), hi_(q) {}

RealAlgebraic RealAlgebraic::root_of(const Poly& p, const Rational& lo, const Rational& hi) {
  if (lo == hi) {
    if (!is_zero(p.eval<Rational>(lo))) throw Error("root_of: point is not a root");
    return RealAlgebraic(lo);
  }
  for (const auto& f : factor_squarefree(square_free_part(p))) {
    if (f.degree() == 1) {
      Rational q = -f.coeff(0) / f.coeff(1);
      if (lo < q && q < hi) return RealAlgebraic(q);
      continue;
    }
    if (sgn(f.eval<Rational>(lo)) * sgn(f.eval<Rational>(hi)) < 0) return RealAlgebraic(primitive_part(f), lo, hi);
  }
  throw Error("root_of: interval does not isolate a root");
}

RealAlgebraic RealAlgebraic::sqrt(const Rational& a) {
  if (sgn(a) < 0) throw std::domain_error("square root of a negative rational");
  if (sgn(a) == 0) return RealAlgebraic(Rational(0));
  Rational hi = std::max(a, Rational(1)) + 1;
  return root_of(Poly{Rational(-a), Rational(0), Rational(1)}, Rational(0), hi);
}

RealAlgebraic RealAlgebraic::from_field(const FieldElem& x) {
  if (x.is_rational()) return RealAlgebraic(x.to_rational());
  const Poly& m = x.field()->minpoly();
  Poly R = interpolate_from(m.degree(), [&](const Rational& X) { return resultant(m, Poly::constant(X) - x.repr()); });
  Poly sf = square_free_part(R);
  auto seq = sturm_sequence(sf);
  Rational width = 1;
  for (int iter = 0; iter < 4000; ++iter) {
    auto [lo, hi] = x.bracket(width);
    if (isolates_one(sf, seq, lo, hi)) return root_of(sf, lo, hi);
    width /= 16;
  }
  throw Error("could not isolate a number field element");
}

Rational RealAlgebraic::to_rational() const {
  if (!is_rational()) throw Error("irrational algebraic number where a rational was required");
  return lo_;
}

std::pair<Rational, Rational> RealAlgebraic::interval(const Rational& width) const {
  RootInterval iv{lo_, hi_, 1};
  refine_root(minpoly_, iv, width);
  return {iv.lo, iv.hi};
}

int RealAlgebraic::sign() const {
  if (is_rational()) return sgn(lo_);
  RootInterval iv{lo_, hi_, 1};
  Rational w = hi_ - lo_;
  while (sgn(iv.lo) < 0 && sgn(iv.hi) > 0) refine_root(minpoly_, iv, w /= 2);
  return sgn(iv.lo) >= 0 ? 1 : -1;
}

Interval RealAlgebraic::enclose(long prec) const {
  if (is_rational()) return Interval(lo_, prec);
  Rational width(1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), static_cast<mp_bitcnt_t>(prec));
  auto [lo, hi] = interval(width);
  return Interval(lo, hi, prec);
}

FieldElem RealAlgebraic::to_field() const {
  if (is_rational()) return FieldElem(lo_);
  return FieldElem::theta(std::make_shared<NumberField>(minpoly_, lo_, hi_));
}

RealAlgebraic RealAlgebraic::operator-() const {
  if (is_rational()) return RealAlgebraic(Rational(-lo_));
  std::vector<Rational> c = minpoly_.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return RealAlgebraic(primitive_part(Poly(std::move(c))), -hi_, -lo_);
}

RealAlgebraic RealAlgebraic::inverse() const {
  if (is_rational()) {
    if (sgn(lo_) == 0) throw std::domain_error("inverse of zero");
    return RealAlgebraic(Rational(1) / lo_);
  }
  RootInterval iv{lo_, hi_, 1};
  Rational w = hi_ - lo_;
  while (sgn(iv.lo) <= 0 && sgn(iv.hi) >= 0) refine_root(minpoly_, iv, w /= 2);
  std::vector<Rational> c(minpoly_.coeffs().rbegin(), minpoly_.coeffs().rend());
  return RealAlgebraic(primitive_part(Poly(std::move(c))), Rational(1) / iv.hi, Rational(1) / iv.lo);
}

RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) return RealAlgebraic(Rational(a.lo_ + b.lo_));
  if (a.is_rational() || b.is_rational()) {
    const RealAlgebraic& x = a.is_rational() ? b : a;
    Rational q = a.is_rational() ? a.lo_ : b.lo_;
    Poly m = primitive_part(x.minpoly_.compose(Poly{Rational(-q), Rational(1)}));
    return RealAlgebraic(m, x.lo_ + q, x.hi_ + q);
  }
  Poly R = sum_resultant(a.minpoly_, b.minpoly_);
  return combine_by_resultant(a, b, R, [](const auto& ia, const auto& ib) {
    return std::pair<Rational, Rational>(ia.first + ib.first, ia.second + ib.second);
  });
}

RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) return RealAlgebraic(Rational(a.lo_ * b.lo_));
  if (a.is_rational() || b.is_rational()) {
    const RealAlgebraic& x = a.is_rational() ? b : a;
    Rational q = a.is_rational() ? a.lo_ : b.lo_;
    if (sgn(q) == 0) return RealAlgebraic(Rational(0));
    std::vector<Rational> c = x.minpoly_.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] /= pow(q, static_cast<long>(k));
    Rational lo = x.lo_ * q, hi = x.hi_ * q;
    if (lo > hi) std::swap(lo, hi);
    return RealAlgebraic(primitive_part(Poly(std::move(c))), lo, hi);
  }
  Poly R = product_resultant(a.minpoly_, b.minpoly_);
  return combine_by_resultant(a, b, R, [](const auto& ia, const auto& ib) {
    Rational p[4] = {ia.first * ib.first, ia.first * ib.second, ia.second * ib.first, ia.second * ib.second};
    return std::pair<Rational, Rational>(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
  });
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.lo_, b.lo_) < 0 ? -1 : (cmp(a.lo_, b.lo_) > 0 ? 1 : 0);
  if (a.hi_ < b.lo_) return -1;
  if (b.hi_ < a.lo_) return 1;
  if (a.minpoly_ == b.minpoly_) {
    // Same polynomial: equal iff the intervals share the root.
    Rational lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
    if (lo < hi && sturm_count(sturm_sequence(a.minpoly_), lo, hi) > 0) return 0;
  }
  return (a - b).sign();
}

bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }

std::string RealAlgebraic::to_string() const {
  if (is_rational()) return rootlog::to_string(lo_);
  if (minpoly_.degree() == 2) return rootlog::to_string(to_field());
  auto [lo, hi] = interval(Rational(1, 1024));
  return "root(" + minpoly_.to_string("x") + ", (" + rootlog::to_string(lo) + ", " + rootlog::to_string(hi) + "))";
}

}  // namespace rootlog
