#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rootlog/rational_function.hpp"

namespace rootlog {

/// p_0(n) a_n + p_1(n) a_{n+1} + ... + p_d(n) a_{n+d} = 0 for n >= start,
/// with a_start .. a_{start+d-1} given.
class Recurrence {
 public:
  Recurrence(std::string name, std::vector<Poly> coeffs, std::vector<Rational> initial, long start = 0);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const std::vector<Rational>& initial() const { return initial_; }
  long start() const { return start_; }
  /// The sequence of interest is a_n / n^alpha_tag(); nonzero only for a
  /// non-integer shift that could not be folded into the coefficients.
  const Rational& alpha_tag() const { return alpha_tag_; }
  Recurrence with_alpha_tag(const Rational& alpha) const;

  /// a_n for start <= n, memoized.
  Rational term(long n) const;
  /// a_start .. a_upto.
  std::vector<Rational> terms(long upto) const;
  /// Exact residual sum_i p_i(n) a_{n+i}.
  Rational residual(long n) const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<Rational> values;
  };
  std::string name_;
  std::vector<Poly> coeffs_;
  std::vector<std::vector<Integer>> int_coeffs_;  // coefficients scaled to integers
  std::vector<Rational> initial_;
  long start_;
  Rational alpha_tag_;
  std::shared_ptr<Cache> cache_;
};

/// p_0(n) + sum_{i>=1} p_i(n) * prod_{t<i} r_{n+t} = 0.
struct RatioForm {
  std::vector<Poly> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Value of the identity for given ratios r_n .. r_{n+d-1}.
  Rational residual(long n, const std::vector<Rational>& ratios) const;
  /// r_n = -p_0/p_1 for an order-1 recurrence.
  RatFunc closed_form() const;
};

RatioForm ratio_form(const Recurrence& rec);

/// Recurrence for b_n = a_n / n^alpha. Integer alpha rescales the
/// coefficients; otherwise the original recurrence is returned tagged with
/// alpha so later stages account for it as r -> r - alpha.
Recurrence shift_by_power(const Recurrence& rec, const Rational& alpha);

}  // namespace rootlog
