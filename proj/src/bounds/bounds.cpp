#include "rootlog/bounds.hpp"

#include <algorithm>

#include "rootlog/error.hpp"

namespace rootlog {

namespace {

FPoly monomial(int k) { return FPoly::monomial(FieldElem(1), k); }

FRatFunc lift(const Poly& p) { return FRatFunc(to_field_poly(p)); }

std::string describe_corner(unsigned mask, int vars) {
  std::string s = "(";
  for (int t = 0; t < vars; ++t) {
    if (t) s += ", ";
    s += (mask >> t & 1) ? "g" : "f";
    s += "(n+" + std::to_string(t) + ")";
  }
  return s + ")";
}

}  // namespace

BoundExpr BoundExpr::from_ratfunc(const FRatFunc& r) {
  BoundExpr b;
  b.exact = r;
  return b;
}

FRatFunc BoundExpr::as_ratfunc() const {
  if (exact) return *exact;
  const int depth = static_cast<int>(coeffs.size()) - 1;
  std::vector<FieldElem> num(coeffs.rbegin(), coeffs.rend());  // coeffs[s] n^{depth-s}
  long shift = to_long(mu0.get_num()) - depth;
  FPoly p(std::move(num));
  if (shift >= 0) return FRatFunc(p * monomial(static_cast<int>(shift)));
  return FRatFunc(p, monomial(static_cast<int>(-shift)));
}

FieldElem BoundExpr::eval(const Rational& n) const {
  FRatFunc r = as_ratfunc();
  FieldElem x(n);
  return r.num().eval<FieldElem>(x) / r.den().eval<FieldElem>(x);
}

std::string BoundExpr::to_string() const {
  if (exact) return exact->to_string();
  std::string s;
  if (sgn(mu0) != 0) s = "n^(" + rootlog::to_string(mu0) + ") * (";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (is_zero(coeffs[k]) && k > 0) continue;
    std::string c = rootlog::to_string(coeffs[k]);
    if (k == 0) {
      s += c;
      continue;
    }
    s += " + (" + c + ")/n";
    if (k > 1) s += "^" + std::to_string(k);
  }
  if (sgn(mu0) != 0) s += ")";
  return s;
}

std::pair<BoundExpr, BoundExpr> make_candidate_bounds(const RatioExpansion& rx, int depth, const Rational& slack) {
  if (sgn(slack) <= 0) throw Error("slack must be positive; use exact bounds for order-1 recurrences");
  if (depth < 0 || depth > rx.order()) throw Error("bound depth must lie in [0, " + std::to_string(rx.order()) + "]");
  if (rx.rho != 1) throw Error("bounds need an unramified expansion");
  BoundExpr f;
  f.mu0 = rx.mu0;
  for (int s = 0; s <= depth; ++s) f.coeffs.push_back(rx.coeff(s));
  BoundExpr g = f;
  f.coeffs.back() -= FieldElem(slack);
  g.coeffs.back() += FieldElem(slack);
  return {f, g};
}

BoundExpr exact_ratio_bound(const Recurrence& rec) {
  return BoundExpr::from_ratfunc(to_field_ratfunc(ratio_form(rec).closed_form()));
}

RatioBoundsCert certify_bounds(const Recurrence& rec, const BoundExpr& f, const BoundExpr& g, long cap) {
  const int d = rec.order();
  const int vars = d - 1;
  const Integer floor = std::max(rec.start(), 1L);
  RatioBoundsCert cert;
  cert.f = f;
  cert.g = g;
  const FRatFunc F = f.as_ratfunc(), G = g.as_ratfunc();

  auto require = [&](std::string what, const FRatFunc& e) {
    EventualSign s = sign_eventual(e, floor);
    if (s.sign < 0)
      throw StageError("bounds", "induction inequality " + what + " is eventually false; raise the depth or the slack");
    cert.steps.push_back({std::move(what), e, s});
  };
  require("f(n) > 0", F);
  require("g(n) - f(n) >= 0", G - F);

  // r_{n+d-1} = -(1/p_d) (p_{d-1} + sum_{i<d-1} p_i prod_{t=i}^{d-2} y_t), y_t = 1/r_{n+t}
  const auto& p = rec.coeffs();
  const FRatFunc inv_pd = FRatFunc(FPoly::constant(FieldElem(-1)), to_field_poly(p[static_cast<std::size_t>(d)]));
  const FRatFunc f_next = F.shift(FieldElem(d - 1)), g_next = G.shift(FieldElem(d - 1));
  for (unsigned mask = 0; mask < (1u << vars); ++mask) {
    std::vector<FRatFunc> y;
    for (int t = 0; t < vars; ++t) {
      const FRatFunc& b = (mask >> t & 1) ? G : F;
      y.push_back(FRatFunc(b.den(), b.num()).shift(FieldElem(t)));
    }
    FRatFunc sum = lift(p[static_cast<std::size_t>(d - 1)]);
    for (int i = 0; i < d - 1; ++i) {
      FRatFunc prod = lift(p[static_cast<std::size_t>(i)]);
      for (int t = i; t < vars; ++t) prod *= y[static_cast<std::size_t>(t)];
      sum += prod;
    }
    FRatFunc phi = inv_pd * sum;
    std::string corner = vars ? "r_{n+" + std::to_string(d - 1) + "} at corner " + describe_corner(mask, vars) : "r_n";
    require(corner + " >= f", phi - f_next);
    require("g >= " + corner, g_next - phi);
  }

  Integer start = floor;
  for (const auto& s : cert.steps) start = std::max(start, s.sign.from);
  if (start > cap) throw StageError("bounds", "induction threshold " + to_string(start) + " exceeds the cap");
  // d-1 consecutive base ratios inside [f, g]
  for (long N = to_long(start); N <= cap; ++N) {
    bool ok = true;
    std::vector<BaseCheck> base;
    for (int t = 0; t < vars && ok; ++t) {
      const long m = N + t;
      const Rational am = rec.term(m);
      if (sgn(am) <= 0) throw StageError("bounds", "term a_" + std::to_string(m) + " is not positive");
      Rational r = rec.term(m + 1) / am;
      FieldElem x(r);
      ok = compare(f.eval(Rational(m)), x) <= 0 && compare(x, g.eval(Rational(m))) <= 0;
      base.push_back({m, r, ok});
    }
    if (ok) {
      cert.N = N;
      cert.base = std::move(base);
      return cert;
    }
  }
  throw StageError("bounds", "no base index up to " + std::to_string(cap) + " places the initial ratios inside [f, g]");
}

}  // namespace rootlog

namespace rootlog {

LogRatExpr TermShape::log_expr() const {
  LogRatExpr e;
  const FRatFunc n_arg(FPoly::x());
  if (!(lead == FieldElem(1))) e.add_log(Poly{Rational(0), Rational(1)}, FRatFunc(FPoly::constant(lead)));
  Poly mult{beta, mu0};
  if (!mult.is_zero()) e.add_log(mult, n_arg);
  if (sgn(mu0) != 0) e.add_rational(FRatFunc(FPoly{FieldElem(0), FieldElem(Rational(-mu0))}));
  return e;
}

std::optional<Rational> TermShape::exact_value(long n) const {
  if (sgn(mu0) != 0 || !lead.is_rational() || !is_integer(beta)) return std::nullopt;
  return pow(lead.to_rational(), n) * pow(Rational(n), to_long(beta.get_num()));
}

Interval TermShape::log_value(long n, long prec) const { return log_expr().eval(Rational(n), prec); }

std::string TermShape::to_string() const {
  std::string s = "(" + rootlog::to_string(lead) + ")^n";
  if (sgn(mu0) != 0) s += " * n^(" + rootlog::to_string(mu0) + "*n) * e^(-" + rootlog::to_string(mu0) + "*n)";
  if (sgn(beta) != 0) s += " * n^(" + rootlog::to_string(beta) + ")";
  return s;
}

}  // namespace rootlog
