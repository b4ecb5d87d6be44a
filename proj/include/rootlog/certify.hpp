#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootlog/asymptotics.hpp"
#include "rootlog/bounds.hpp"
#include "rootlog/lograt.hpp"
#include "rootlog/verify.hpp"

namespace rootlog {

/// One link of the derivative chain: the sign of the order-th derivative on
/// the real half-line [threshold, inf).
struct ChainStep {
  int order = 0;
  std::string expr;
  int sign = 0;
  Integer threshold;
  std::optional<Limit> limit;  // absent for the rational top step
  std::string rule;
};

struct PointCheck {
  long n;
  int sign;
  long prec;
};

struct SignCert {
  LogRatExpr expr;
  int want = -1;                 // -1: expr <= 0 wanted, +1: expr >= 0
  std::vector<ChainStep> chain;  // highest derivative first
  Integer analytic_from;         // conclusion of the chain
  PointCheck boundary{0, 0, 0};  // expr evaluated at analytic_from
  std::vector<PointCheck> extension;  // downward pointwise checks
  Integer from;                  // final threshold
  int sign = 0;                  // sign of expr for n >= from (0: identically zero)
};

/// Sign of expr for all integers n >= from. Differentiates until rational,
/// settles that sign by root bounds, then walks back down with limits at
/// infinity, and finally extends the threshold downward pointwise.
SignCert certify_sign(const LogRatExpr& expr, int want, long floor = 1);

/// Re-checks every chain step at sample points and the recorded point checks.
/// Returns an empty string on success, otherwise the first failing check.
std::string replay(const SignCert& cert);

struct TermBound {
  TermShape h;
  long N_h = 0;        // induction step valid for n >= N_h
  long base_index = 0; // a_base <= h(base), checked
  std::optional<FRatFunc> residual;      // (h_{n+1} - h_n g_n)/h_n when rational
  std::optional<EventualSign> residual_sign;
  std::optional<SignCert> induction;     // log h_{n+1} - log h_n - log g_n >= 0 otherwise
  std::string base_method;
};

/// beta for h: the simplest dyadic rational strictly between r and alpha
/// (case mu0 = 0), or floor(r) + 1 when mu0 > 0.
Rational auto_beta(const AsymptoticForm& form, const Rational& alpha);

/// c ((n+1)/n)^beta - g(n) = (h_{n+1} - h_n g_n)/h_n, for mu0 = 0 and integer beta.
FRatFunc term_residual(const TermShape& h, const FRatFunc& g);
/// log h_{n+1} - log h_n - log g_n, the general induction step.
LogRatExpr term_log_step(const TermShape& h, const FRatFunc& g);

TermBound make_term_bound(const AsymptoticForm& form, const RatioBoundsCert& bounds, const Recurrence& rec,
                          const Rational& beta, long cap = 20000, const VerifyConfig& cfg = default_verify_config());

/// 2 log h_n + n(n+1) log g_{n+1} - n(n+3) log f_n for b_n = a_n/n^alpha
/// (h, f, g bound a_n and its ratio); <= 0 makes window (n, n+1, n+2) log-concave.
LogRatExpr concavity_expr(const TermShape& h, const BoundExpr& f, const BoundExpr& g, const Rational& alpha = 0);
/// 6 log h_n + (n^2-n)(2n+5) log g_n - (n^2+n)(n+2) log f_{n-1} - (n^3-n) log f_{n+1};
/// <= 0 makes window (n-1, .., n+2) ratio log-convex.
LogRatExpr ratio_convexity_expr(const TermShape& h, const BoundExpr& f, const BoundExpr& g, const Rational& alpha = 0);

struct CertifyConfig {
  int K = 6;
  std::optional<int> depth;     // 2 for log-concavity, 3 for ratio log-convexity
  Rational slack = 1;
  std::optional<Rational> beta; // AUTO when absent
  long max_n = 20000;
  long margin = 100;            // exact check reaches N_analytic + margin
  VerifyConfig verify = default_verify_config();
};

struct RootLogCert {
  Variant kind = Variant::LogConcave;
  Rational alpha;         // as requested
  Rational folded_alpha;  // integer part folded into the recurrence
  std::string sequence;
  AsymptoticForm form;
  AsymptoticClass verdict;
  RatioBoundsCert bounds;
  TermBound term_bound;
  SignCert sign_cert;
  long N_analytic = 0;    // root sequence from here on by the analytic argument
  long N_final = 0;       // ... and from here on after the exact check
  std::vector<long> initial_exceptions;
  RangeReport initial_check;
  RangeReport bounds_check;
};

/// First window start covered by the analytic argument.
long analytic_threshold(Variant kind, long sign_from, long term_base, long bounds_N);

/// Full pipeline; stage failures raise StageError, inapplicable criteria NotApplicable.
RootLogCert certify_root_log(const Recurrence& rec, const Rational& alpha, Variant kind,
                             const CertifyConfig& cfg = CertifyConfig{});

}  // namespace rootlog
