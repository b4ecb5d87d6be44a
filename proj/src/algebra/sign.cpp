#include "rootlog/sign.hpp"

#include <algorithm>

#include "rootlog/roots.hpp"

namespace rootlog {

FRatFunc to_field_ratfunc(const RatFunc& f) { return FRatFunc(to_field_poly(f.num()), to_field_poly(f.den())); }

Integer poly_threshold(const FPoly& p) {
  Poly n = norm_poly(p);
  auto bound = max_real_root_bound(n);
  if (bound) return *bound;
  return -root_magnitude_bound(n);
}

std::optional<Integer> real_threshold(const FRatFunc& f) {
  if (f.is_zero()) return std::nullopt;
  return std::max(poly_threshold(f.num()), poly_threshold(f.den()));
}

int sign_at(const FRatFunc& f, const Rational& n) {
  FieldElem x(n);
  FieldElem d = f.den().eval<FieldElem>(x);
  if (is_zero(d)) throw std::domain_error("rational function evaluated at a pole");
  return f.num().eval<FieldElem>(x).sign() * d.sign();
}

EventualSign sign_eventual(const FRatFunc& f, const Integer& floor) {
  if (f.is_zero()) return {0, floor};
  EventualSign out;
  out.sign = f.num().lc().sign();
  out.from = std::max(*real_threshold(f), floor);
  for (Integer n = out.from - 1; n >= floor; --n) {
    Rational x(n);
    if (is_zero(f.den().eval<FieldElem>(FieldElem(x)))) break;
    if (sign_at(f, x) != out.sign) break;
    out.from = n;
  }
  return out;
}

EventualSign sign_eventual(const RatFunc& f, const Integer& floor) { return sign_eventual(to_field_ratfunc(f), floor); }

}  // namespace rootlog
