#include "rootlog/number_field.hpp"

#include <algorithm>
#include <tuple>

#include "rootlog/error.hpp"
#include "rootlog/factor.hpp"
#include "rootlog/resultant.hpp"

namespace rootlog {

namespace {

struct Surd {
  Rational p, q;  // theta = p + q * sqrt(s)
  Integer s;
};

// Square-free factorization of a positive integer by trial division; whatever
// survives the small primes is kept under the radical.
void split_square(Integer d, Integer& outside, Integer& inside) {
  outside = 1;
  inside = 1;
  for (unsigned long f = 2; f < 100000 && Integer(f) * f <= d; ++f) {
    Integer ff = Integer(f) * f;
    while (d % ff == 0) {
      d /= ff;
      outside *= f;
    }
    if (d % f == 0) {
      d /= f;
      inside *= f;
    }
  }
  inside *= d;
}

Surd quadratic_surd(const NumberField& K) {
  std::vector<Integer> c = primitive_integer_coeffs(K.minpoly());
  Integer disc = c[1] * c[1] - 4 * c[2] * c[0];
  Integer k, s;
  split_square(disc, k, s);
  Rational center(-c[1], 2 * c[2]);
  center.canonicalize();
  Rational q(k, 2 * c[2]);
  q.canonicalize();
  Rational width(1, 1024);
  auto [lo, hi] = K.interval(width);
  while (lo < center && center < hi) std::tie(lo, hi) = K.interval(width /= 16);
  if (hi <= center) q = -q;
  return {center, abs_of(q), s};
}

std::string surd_string(const Rational& a, const Rational& b, const Integer& s) {
  std::string root = "sqrt(" + s.get_str() + ")";
  std::string out;
  if (!is_zero(a)) out = to_string(a);
  if (is_zero(b)) return out.empty() ? "0" : out;
  Rational mag = abs_of(b);
  std::string term = mag == 1 ? root : to_string(mag) + "*" + root;
  if (out.empty()) return sgn(b) < 0 ? "-" + term : term;
  return out + (sgn(b) < 0 ? " - " : " + ") + term;
}

Poly mod_reduce(const Poly& v, const FieldPtr& K) {
  if (!K || v.degree() < K->degree()) return v;
  return divrem(v, K->minpoly()).second;
}

}  // namespace

std::pair<Rational, Rational> eval_rational_interval(const Poly& q, const Rational& lo, const Rational& hi) {
  Rational alo = 0, ahi = 0;
  const auto& c = q.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational p[4] = {alo * lo, alo * hi, ahi * lo, ahi * hi};
    Rational mn = p[0], mx = p[0];
    for (const auto& v : p) {
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    alo = mn + *it;
    ahi = mx + *it;
  }
  return {alo, ahi};
}

NumberField::NumberField(Poly minpoly, Rational lo, Rational hi) : minpoly_(minpoly.monic()) {
  if (minpoly_.degree() < 2) throw Error("number field needs a minimal polynomial of degree >= 2");
  iv_ = {std::move(lo), std::move(hi), 1};
}

std::pair<Rational, Rational> NumberField::interval(const Rational& width) const {
  std::lock_guard<std::mutex> lock(mu_);
  refine_root(minpoly_, iv_, width);
  return {iv_.lo, iv_.hi};
}

std::pair<Rational, Rational> NumberField::interval() const {
  std::lock_guard<std::mutex> lock(mu_);
  return {iv_.lo, iv_.hi};
}

Interval NumberField::theta(long prec) const {
  Rational width(1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), static_cast<mp_bitcnt_t>(prec));
  auto [lo, hi] = interval(width);
  return Interval(lo, hi, prec);
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (!(minpoly_ == other.minpoly_)) return false;
  auto [alo, ahi] = interval();
  auto [blo, bhi] = other.interval();
  // Each interval holds exactly one root; they name the same root iff their
  // intersection holds one.
  Rational lo = std::max(alo, blo), hi = std::min(ahi, bhi);
  if (lo >= hi) return false;
  return sturm_count(sturm_sequence(minpoly_), lo, hi) > 0;
}

std::string NumberField::describe() const {
  if (degree() == 2) {
    Surd s = quadratic_surd(*this);
    return surd_string(s.p, s.q, s.s);
  }
  auto [lo, hi] = interval(Rational(1, 1024));
  return "root of " + minpoly_.to_string("x") + " in (" + to_string(lo) + ", " + to_string(hi) + ")";
}

FieldElem::FieldElem(FieldPtr field, const Poly& v) : field_(std::move(field)), v_(mod_reduce(v, field_)) {}

FieldElem FieldElem::theta(FieldPtr field) { return FieldElem(std::move(field), Poly::x()); }

Rational FieldElem::to_rational() const {
  if (!is_rational()) throw Error("irrational value where a rational was required: " + rootlog::to_string(*this));
  return v_.coeff(0);
}

Interval FieldElem::enclose(long prec) const {
  if (is_rational()) return Interval(v_.coeff(0), prec);
  Interval th = field_->theta(prec + 16);
  Interval acc(prec);
  const auto& c = v_.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * th + Interval(*it, prec);
  return acc;
}

std::pair<Rational, Rational> FieldElem::bracket(const Rational& width) const {
  if (is_rational()) return {v_.coeff(0), v_.coeff(0)};
  Rational w = width;
  while (true) {
    auto [lo, hi] = field_->interval(w);
    auto r = eval_rational_interval(v_, lo, hi);
    if (r.second - r.first <= width) return r;
    w /= 4;
  }
}

int FieldElem::sign() const {
  if (is_rational()) return sgn(v_.coeff(0));
  for (long prec = 64; prec <= (1L << 16); prec *= 2) {
    auto s = enclose(prec).sign();
    if (s) return *s;
  }
  throw Error("could not decide the sign of " + rootlog::to_string(*this));
}

FieldElem FieldElem::inverse() const {
  if (is_zero(*this)) throw std::domain_error("inverse of zero");
  if (is_rational()) return FieldElem(field_, Poly::constant(Rational(1) / v_.coeff(0)));
  // Extended Euclid: s*v + t*m = 1.
  Poly r0 = field_->minpoly(), r1 = v_;
  Poly s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error("element is a zero divisor; minimal polynomial is reducible");
  return FieldElem(field_, s0 * (Rational(1) / r0.coeff(0)));
}

FieldPtr FieldElem::join(const FieldElem& a, const FieldElem& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (a.field_->same_as(*b.field_)) return a.field_;
  throw Error("arithmetic between elements of different number fields");
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, -v_); }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  FieldElem r;
  r.field_ = FieldElem::join(a, b);
  r.v_ = a.v_ + b.v_;
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  FieldElem r;
  r.field_ = FieldElem::join(a, b);
  r.v_ = a.v_ - b.v_;
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldPtr K = FieldElem::join(a, b);
  return FieldElem(K, a.v_ * b.v_);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() && b.is_rational()) return a.v_ == b.v_;
  FieldElem::join(a, b);
  return a.v_ == b.v_;
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result(field_, Poly::constant(1)), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool is_zero(const FieldElem& x) { return x.repr().is_zero(); }
int sign_of(const FieldElem& x) { return x.sign(); }
int compare(const FieldElem& a, const FieldElem& b) { return (a - b).sign(); }

std::string to_string(const FieldElem& x) {
  if (x.is_rational()) return to_string(x.repr().coeff(0));
  const NumberField& K = *x.field();
  if (K.degree() == 2) {
    Surd s = quadratic_surd(K);
    const Rational& v0 = x.repr().coeff(0);
    const Rational& v1 = x.repr().coeff(1);
    return surd_string(v0 + v1 * s.p, v1 * s.q, s.s);
  }
  return "(" + x.repr().to_string("theta") + ")";
}

FieldPtr make_field(const Poly& p, const Rational& lo, const Rational& hi, Rational* rational_root) {
  if (lo == hi) {
    if (!is_zero(p.eval<Rational>(lo))) throw Error("make_field: point is not a root");
    if (rational_root) *rational_root = lo;
    return nullptr;
  }
  for (const auto& f : factor_squarefree(square_free_part(p))) {
    if (f.degree() == 1) {
      Rational q = -f.coeff(0) / f.coeff(1);
      if (lo < q && q < hi) {
        if (rational_root) *rational_root = q;
        return nullptr;
      }
      continue;
    }
    if (sgn(f.eval<Rational>(lo)) * sgn(f.eval<Rational>(hi)) < 0) return std::make_shared<NumberField>(f, lo, hi);
  }
  throw Error("make_field: no factor owns a root in the interval");
}

FPoly to_field_poly(const Poly& p) {
  std::vector<FieldElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return FPoly(std::move(c));
}

bool is_rational_poly(const FPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

Poly to_rational_poly(const FPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.to_rational());
  return Poly(std::move(c));
}

FieldPtr field_of(const FPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.field() && !c.is_rational()) return c.field();
  return nullptr;
}

Poly norm_poly(const FPoly& p) {
  FieldPtr K = field_of(p);
  if (!K) return to_rational_poly(p);
  const Poly& m = K->minpoly();
  const int D = p.degree() * K->degree();
  return interpolate_from(D, [&](const Rational& x) {
    Poly acc;
    Rational xp = 1;
    for (const auto& c : p.coeffs()) {
      acc += c.repr() * xp;
      xp *= x;
    }
    return resultant(m, acc);
  });
}

}  // namespace rootlog
