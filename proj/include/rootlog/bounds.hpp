#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootlog/form.hpp"
#include "rootlog/lograt.hpp"
#include "rootlog/recurrence.hpp"
#include "rootlog/sign.hpp"

namespace rootlog {

/// n^{mu0} * sum_s coeffs[s] * n^{-s} (rho = 1), or an exact rational function.
struct BoundExpr {
  Rational mu0;
  std::vector<FieldElem> coeffs;  // coeffs[0] is the prefactor c
  std::optional<FRatFunc> exact;
  int rho = 1;

  static BoundExpr from_ratfunc(const FRatFunc& r);
  const FieldElem& lead() const { return coeffs.front(); }
  FRatFunc as_ratfunc() const;
  FieldElem eval(const Rational& n) const;
  std::string to_string() const;
};

/// Truncated ratio expansion through n^{-depth} with the last coefficient
/// moved down (f) and up (g) by slack.
std::pair<BoundExpr, BoundExpr> make_candidate_bounds(const RatioExpansion& rx, int depth, const Rational& slack);

/// r_n itself, for order-1 recurrences.
BoundExpr exact_ratio_bound(const Recurrence& rec);

struct InductionStep {
  std::string description;
  FRatFunc expr;  // must be >= 0 from sign.from on
  EventualSign sign;
};

struct BaseCheck {
  long n;
  Rational ratio;
  bool pass;
};

struct RatioBoundsCert {
  BoundExpr f, g;
  long N = 0;
  std::vector<InductionStep> steps;
  std::vector<BaseCheck> base;
};

/// h(n) = c^n * n^{mu0 n} * e^{-mu0 n} * n^beta, the shape of the term upper bound.
struct TermShape {
  Rational mu0;
  FieldElem lead;
  Rational beta;

  /// log h(n) as an expression in n.
  LogRatExpr log_expr() const;
  /// h(n) exactly, when it is rational at integers (mu0 = 0, rational c, integer beta).
  std::optional<Rational> exact_value(long n) const;
  Interval log_value(long n, long prec) const;
  std::string to_string() const;
};

/// Finds N with f(n) <= r_n <= g(n) for all n >= N. The induction step uses
/// that r_{n+d-1} is multilinear in 1/r_n, ..., 1/r_{n+d-2}, so its range
/// over the box [f, g]^{d-1} is spanned by the corner values.
RatioBoundsCert certify_bounds(const Recurrence& rec, const BoundExpr& f, const BoundExpr& g, long cap = 1000000);

}  // namespace rootlog
