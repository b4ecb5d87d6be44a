#include <algorithm>

#include "rootlog/certify.hpp"
#include "rootlog/error.hpp"
#include "rootlog/sign.hpp"

namespace rootlog {

namespace {

Integer floor_of(const FieldElem& x) {
  if (x.is_rational()) return rootlog::floor_of(x.to_rational());
  for (Rational w(1, 1024);; w /= 1024) {
    auto [lo, hi] = x.bracket(w);
    Integer a = rootlog::floor_of(lo), b = rootlog::floor_of(hi);
    if (a == b) return a;
  }
}

template <class Fn>
auto stage(const std::string& name, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const NotApplicable&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace

Rational auto_beta(const AsymptoticForm& form, const Rational& alpha) {
  if (sgn(form.mu0) > 0) return Rational(floor_of(form.r) + 1);
  if (compare(form.r, FieldElem(alpha)) >= 0) throw NotApplicable("no admissible beta: r - alpha >= 0");
  for (long d = 1; d <= (1L << 40); d *= 2) {
    Integer jlo = floor_of(form.r * FieldElem(d)) + 1;
    Integer jhi = rootlog::ceil_of(alpha * d) - 1;
    if (jlo <= jhi) {
      Integer mid = jlo + (jhi - jlo) / 2;
      Rational b(mid, d);
      b.canonicalize();
      return b;
    }
  }
  throw Error("r and alpha are too close for a dyadic beta");
}

FRatFunc term_residual(const TermShape& h, const FRatFunc& g) {
  if (sgn(h.mu0) != 0 || !is_integer(h.beta)) throw Error("rational residual needs mu0 = 0 and an integer beta");
  const long b = to_long(h.beta.get_num());
  FPoly up{FieldElem(1), FieldElem(1)}, down = FPoly::x();
  FRatFunc q = b >= 0 ? FRatFunc(up.pow(static_cast<unsigned>(b)), down.pow(static_cast<unsigned>(b)))
                      : FRatFunc(down.pow(static_cast<unsigned>(-b)), up.pow(static_cast<unsigned>(-b)));
  return q * FRatFunc(FPoly::constant(h.lead)) - g;
}

LogRatExpr term_log_step(const TermShape& h, const FRatFunc& g) {
  LogRatExpr lh = h.log_expr();
  LogRatExpr e = lh.shift(1) - lh;
  e.add_log(Poly::constant(Rational(-1)), g);
  return e;
}

long analytic_threshold(Variant kind, long sign_from, long term_base, long bounds_N) {
  // D(n) <= 0 covers the window starting at n (log-concave) or n - 1 (ratio log-convex)
  const bool lc = kind == Variant::LogConcave;
  long valid = std::max({sign_from, term_base, bounds_N + (lc ? 0 : 1)});
  return lc ? valid : valid - 1;
}

TermBound make_term_bound(const AsymptoticForm& form, const RatioBoundsCert& bounds, const Recurrence& rec,
                          const Rational& beta, long cap, const VerifyConfig& cfg) {
  if (form.rho != 1) throw Error("term bounds need rho = 1");
  TermBound tb;
  tb.h = TermShape{form.mu0, form.lead, beta};
  const long floor = std::max(rec.start(), 1L);
  const FRatFunc G = bounds.g.as_ratfunc();
  if (sgn(form.mu0) == 0 && is_integer(beta)) {
    FRatFunc res = term_residual(tb.h, G);
    EventualSign s = sign_eventual(res, floor);
    if (s.sign < 0) throw StageError("term-bound", "h_{n+1} < h_n g_n eventually; choose a larger beta");
    tb.residual = res;
    tb.residual_sign = s;
    tb.N_h = to_long(s.from);
  } else {
    tb.induction = certify_sign(term_log_step(tb.h, G), +1, floor);
    tb.N_h = to_long(tb.induction->from);
  }
  for (long B = std::max(bounds.N, tb.N_h); B <= cap; ++B) {
    RangeReport r = check_term_under_bound(rec, tb.h, B, B, cfg);
    if (r.clean()) {
      tb.base_index = B;
      tb.base_method = r.checks.front().method;
      return tb;
    }
  }
  throw StageError("term-bound", "a_n <= h(n) fails at every base index up to " + std::to_string(cap));
}

RootLogCert certify_root_log(const Recurrence& rec, const Rational& alpha, Variant kind, const CertifyConfig& cfg) {
  RootLogCert cert;
  cert.kind = kind;
  cert.alpha = alpha;
  cert.sequence = rec.name();
  const bool lc = kind == Variant::LogConcave;
  const Rational rest = is_integer(alpha) ? Rational(0) : alpha;
  cert.folded_alpha = alpha - rest;
  const Recurrence work = stage("shift", [&] { return shift_by_power(rec, cert.folded_alpha).with_alpha_tag(0); });

  auto rx = stage("expand", [&] { return expand_ratio(work, cfg.K); });
  cert.form = stage("expand", [&] { return to_asymptotic_form(rx.front()); });
  cert.verdict = stage("classify", [&] { return classify(cert.form, rest, kind); });
  const Verdict holds = lc ? Verdict::LogConcave : Verdict::RatioLogConvex;
  if (cert.verdict.verdict != holds)
    throw NotApplicable("asymptotic criterion gives " + to_string(cert.verdict.verdict) + ": " + cert.verdict.note);

  cert.bounds = stage("bounds", [&] {
    if (work.order() == 1) {
      BoundExpr r = exact_ratio_bound(work);
      return certify_bounds(work, r, r, cfg.max_n);
    }
    auto [f, g] = make_candidate_bounds(rx.front(), cfg.depth.value_or(lc ? 2 : 3), cfg.slack);
    return certify_bounds(work, f, g, cfg.max_n);
  });
  cert.bounds_check = stage("bounds", [&] {
    return check_ratio_bounds(work, cert.bounds.f, cert.bounds.g, cert.bounds.N, cert.bounds.N + 500);
  });
  if (!cert.bounds_check.clean()) throw StageError("bounds", "spot check failed: " + cert.bounds_check.to_string());

  const Rational beta = cfg.beta ? *cfg.beta : stage("term-bound", [&] { return auto_beta(cert.form, rest); });
  cert.term_bound = stage("term-bound", [&] { return make_term_bound(cert.form, cert.bounds, work, beta, cfg.max_n, cfg.verify); });

  const long floor = std::max(work.start(), 1L) + (lc ? 0 : 1);
  cert.sign_cert = stage("sign", [&] {
    LogRatExpr e = lc ? concavity_expr(cert.term_bound.h, cert.bounds.f, cert.bounds.g, rest)
                      : ratio_convexity_expr(cert.term_bound.h, cert.bounds.f, cert.bounds.g, rest);
    return certify_sign(e, -1, floor);
  });

  cert.N_analytic = analytic_threshold(kind, to_long(cert.sign_cert.from), cert.term_bound.base_index, cert.bounds.N);

  const long lo = std::max(work.start(), 1L);
  const long hi = cert.N_analytic + cfg.margin;
  cert.initial_check = stage("verify", [&] {
    return lc ? check_root_logconcave(work, rest, lo, hi, cfg.verify) : check_root_ratio_logconvex(work, rest, lo, hi, cfg.verify);
  });
  cert.N_final = lo;
  for (const auto& c : cert.initial_check.checks)
    if (!c.pass) {
      if (c.n >= cert.N_analytic)
        throw StageError("verify", "window " + std::to_string(c.n) + " fails above the analytic threshold (" + c.method + ")");
      cert.initial_exceptions.push_back(c.n);
      cert.N_final = c.n + 1;
    }
  return cert;
}

}  // namespace rootlog
