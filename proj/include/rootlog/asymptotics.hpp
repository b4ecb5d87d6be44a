#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootlog/form.hpp"
#include "rootlog/recurrence.hpp"

namespace rootlog {

/// Formal ratio expansions of the recurrence, dominant branch first. Throws
/// NotApplicable when the dominant characteristic root is not a simple,
/// strictly dominant positive real root, or when the growth exponent is not
/// an integer.
std::vector<RatioExpansion> expand_ratio(const Recurrence& rec, int K = 6);

/// sum_i p_i(n) c^i n^{i mu0} prod_{t<i} T(n+t) / n^E as a series in 1/n; its
/// known coefficients vanish for a correct expansion.
PSeries ratio_residual(const Recurrence& rec, const RatioExpansion& rx);

/// Recovers mu0, r and b_1..b_{K-1} (b_0 = 1) from the ratio expansion.
AsymptoticForm to_asymptotic_form(const RatioExpansion& rx);

enum class Verdict { LogConcave, RatioLogConvex, Both, Indeterminate, NotApplicable };

std::string to_string(Verdict v);

struct DominantTerm {
  int exponent = 0;   // the term is coefficient * n^{-exponent/rho}
  LogCoeff coefficient;
  bool has_log() const { return coefficient.has_log(); }
};

struct AsymptoticClass {
  Verdict verdict = Verdict::Indeterminate;
  int case_used = 0;  // 1, 2, 3, or 0 for none
  std::optional<DominantTerm> dominant;
  std::string note;
};

/// Asymptotic log-concavity or ratio log-convexity of the root sequence of
/// a_n / n^alpha, by the three-case criterion.
AsymptoticClass classify(const AsymptoticForm& form, const Rational& alpha, Variant variant);
/// Both variants at once; the verdict is Both when both hold.
AsymptoticClass classify(const AsymptoticForm& form, const Rational& alpha);

/// Leading nonzero term of a series, if any known term is nonzero.
std::optional<DominantTerm> leading_term(const PSeries& s);

}  // namespace rootlog
