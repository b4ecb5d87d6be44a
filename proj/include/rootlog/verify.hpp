#pragma once

#include <string>
#include <vector>

#include "rootlog/bounds.hpp"
#include "rootlog/recurrence.hpp"

namespace rootlog {

struct VerifyConfig {
  /// Exact big-integer comparison while the powers stay below this many bits.
  long bits_budget = 1L << 24;
  /// Indices checked both ways at the top of the exact region.
  int overlap = 50;
  long start_prec = 128;
  long max_prec = 1L << 20;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Default config with the budget taken from ROOTLOG_BITS_BUDGET when set.
VerifyConfig default_verify_config();

enum class Inequality { RootLogConcave, RootRatioLogConvex, RatioInBounds, TermUnderBound };
std::string to_string(Inequality i);

struct IndexCheck {
  long n;
  bool pass;
  std::string method;  // "exact", "interval:<bits>", "identity", "exact+interval:<bits>", "exact+identity", "undecided"
};

struct RangeReport {
  Inequality inequality = Inequality::RootLogConcave;
  Rational alpha;
  long lo = 0, hi = -1;
  std::vector<long> failures;
  std::vector<IndexCheck> checks;

  bool clean() const { return failures.empty(); }
  std::string to_string() const;
};

/// Windows (m, m+1, m+2) for lo <= m <= hi of b_n = a_n / n^alpha:
/// b_{m+2}^{m(m+1)} b_m^{(m+1)(m+2)} <= b_{m+1}^{2m(m+2)}.
RangeReport check_root_logconcave(const Recurrence& rec, const Rational& alpha, long lo, long hi,
                                  const VerifyConfig& cfg = default_verify_config());
/// Windows (m, .., m+3): the cleared form of the third difference of log(b_n)/n.
RangeReport check_root_ratio_logconvex(const Recurrence& rec, const Rational& alpha, long lo, long hi,
                                       const VerifyConfig& cfg = default_verify_config());
/// f(n) <= a_{n+1}/a_n <= g(n), exactly.
RangeReport check_ratio_bounds(const Recurrence& rec, const BoundExpr& f, const BoundExpr& g, long lo, long hi);
/// a_n <= h(n).
RangeReport check_term_under_bound(const Recurrence& rec, const TermShape& h, long lo, long hi,
                                   const VerifyConfig& cfg = default_verify_config());

}  // namespace rootlog
