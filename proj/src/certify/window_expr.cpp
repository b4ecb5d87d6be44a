#include "rootlog/certify.hpp"
#include "rootlog/error.hpp"

namespace rootlog {

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

FRatFunc ratio_of_shifts(long a, long b) {  // (n+a)/(n+b)
  return FRatFunc(FPoly{FieldElem(a), FieldElem(1)}, FPoly{FieldElem(b), FieldElem(1)});
}

void add(LogRatExpr& e, const Poly& mult, const FRatFunc& arg) {
  if (mult.is_zero() || arg == FRatFunc(FPoly::constant(FieldElem(1)))) return;
  e.add_log(mult, arg);
}

// log b_{m+1}/b_m = log r_m - alpha log((m+1)/m), m = n + k
void add_ratio(LogRatExpr& e, const Poly& mult, const FRatFunc& bound, long k, const Rational& alpha) {
  add(e, mult, bound.shift(FieldElem(k)));
  if (sgn(alpha) != 0) add(e, Rational(-alpha) * mult, ratio_of_shifts(k + 1, k));
}

LogRatExpr log_term(const TermShape& h, const Rational& weight, const Rational& alpha) {
  LogRatExpr e = weight * h.log_expr();
  if (sgn(alpha) != 0) add(e, Poly::constant(Rational(-weight * alpha)), FRatFunc(FPoly::x()));
  return e;
}

}  // namespace

LogRatExpr concavity_expr(const TermShape& h, const BoundExpr& f, const BoundExpr& g, const Rational& alpha) {
  LogRatExpr e = log_term(h, 2, alpha);
  add_ratio(e, P({0, 1, 1}), g.as_ratfunc(), 1, alpha);     // n(n+1) log g_{n+1}
  add_ratio(e, P({0, -3, -1}), f.as_ratfunc(), 0, alpha);   // -n(n+3) log f_n
  return e;
}

LogRatExpr ratio_convexity_expr(const TermShape& h, const BoundExpr& f, const BoundExpr& g, const Rational& alpha) {
  LogRatExpr e = log_term(h, 6, alpha);
  const FRatFunc F = f.as_ratfunc(), G = g.as_ratfunc();
  add_ratio(e, P({0, -5, 3, 2}), G, 0, alpha);    // (n^2-n)(2n+5) log g_n
  add_ratio(e, P({0, -2, -3, -1}), F, -1, alpha); // -(n^2+n)(n+2) log f_{n-1}
  add_ratio(e, P({0, 1, 0, -1}), F, 1, alpha);    // -(n^3-n) log f_{n+1}
  return e;
}

}  // namespace rootlog
