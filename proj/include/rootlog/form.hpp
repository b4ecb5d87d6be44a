#pragma once

#include <string>
#include <vector>

#include "rootlog/lograt.hpp"
#include "rootlog/series.hpp"

namespace rootlog {

enum class Variant { LogConcave, RatioLogConvex };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

/// r_n = a_{n+1}/a_n ~ c * n^{mu0} * T(n) with T = 1 + t_1/n + ... (rho = 1),
/// or in powers of n^{-1/rho} in general.
struct RatioExpansion {
  Rational mu0;
  int rho = 1;
  FieldElem lead;   // c > 0
  PSeries tail;     // constant term 1, order K
  Poly char_poly;   // characteristic polynomial of the Newton polygon edge

  int order() const { return tail.order(); }
  /// Coefficient of n^{mu0 - s/rho} in r_n.
  FieldElem coeff(int s) const { return lead * tail.plain(s); }
  std::string to_string() const;
};

/// a_n ~ C * exp(mu0*n*log n + sum_j mu_j n^{j/rho}) * n^r * (1 + sum_s b_s n^{-s/rho}),
/// with the constant C left out and b_0 = 1.
struct AsymptoticForm {
  Rational mu0;
  int rho = 1;
  std::vector<FieldElem> mu;     // mu_1 .. mu_{rho-1}
  FieldElem lead;                // mu_rho = log(lead) - mu0
  FieldElem r;
  std::vector<FieldElem> b;      // b_1 .. b_M
  std::vector<FieldElem> log_b;  // log(1 + sum b_s n^{-s/rho}) = sum_k log_b[k-1] n^{-k/rho}
  int M = 0;

  LogConst mu_rho() const;
  /// lambda = e^{mu_rho}, algebraic only when mu0 = 0.
  bool lambda_algebraic() const { return sgn(mu0) == 0; }
  std::string to_string() const;
};

/// Expansion of log(a_n)/n without the constant mu_rho, as a series of order
/// M + rho (coefficient pairs carry the log n parts).
PSeries root_log_series(const AsymptoticForm& form);

/// Second difference F(n+1) + F(n-1) - 2F(n) of F = log(a_n)/n (log-concave
/// variant) or -F(n+2) + 3F(n+1) - 3F(n) + F(n-1) (ratio log-convex), with
/// truncation order min(K, M + rho).
PSeries delta_expansion(const AsymptoticForm& form, Variant variant, int K);

}  // namespace rootlog
