// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rootlog/asymptotics.hpp"
#include "rootlog/certify.hpp"
#include "rootlog/error.hpp"
#include "rootlog/series.hpp"
#include "rootlog/spec_io.hpp"

using namespace rootlog;

namespace {

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ostringstream notes;

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream o;
    o << what << ": got " << to_string(got) << ", expected " << to_string(want);
    throw Failed(o.str());
  }
}

Recurrence corpus(const std::string& name) { return load_spec("corpus:" + name).to_recurrence(); }

FieldElem q(long a, long b = 1) {
  Rational x(a, b);
  x.canonicalize();
  return FieldElem(x);
}

Rational Q(long a, long b = 1) { return q(a, b).to_rational(); }

AsymptoticForm form_of(const std::string& name) { return to_asymptotic_form(expand_ratio(corpus(name), 6).front()); }

std::vector<long> oracle_failures(const Recurrence& rec, long lo, long hi, bool third) {
  return oracle::root_failures(rec.terms(hi + 4), rec.start(), lo, hi, third);
}

bool ratios_inside(const Recurrence& rec, const BoundExpr& f, const BoundExpr& g, long lo, long hi) {
  for (long n = lo; n <= hi; ++n) {
    FieldElem r(rec.term(n + 1) / rec.term(n));
    if (compare(f.eval(Rational(n)), r) > 0 || compare(r, g.eval(Rational(n))) > 0) return false;
  }
  return true;
}

std::string list(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s.empty() ? "none" : s;
}

// ---------------------------------------------------------------------------

void motzkin_expansion() {
  auto m = form_of("motzkin");
  expect_eq(m.lead, q(3), "lambda");
  expect_eq(m.r, q(-3, 2), "r");
  expect_eq(m.b.at(0), q(-39, 16), "b1");
  expect_eq(m.b.at(1), q(2665, 512), "b2");
  expect_eq(m.b.at(2), q(-87885, 8192), "b3");
}

void gn_expansion() {
  auto g = form_of("gn");
  expect_eq(g.mu0, Rational(1), "mu0");
  expect(g.mu_rho().to_string() == "-1", "mu1 = " + g.mu_rho().to_string());
  expect_eq(g.r, q(0), "r");
  expect_eq(g.b.at(0), q(11, 24), "b1");
  expect_eq(g.b.at(1), q(913, 1152), "b2");
  expect_eq(g.b.at(2), q(829543, 414720), "b3");
  for (Variant v : {Variant::LogConcave, Variant::RatioLogConvex}) {
    AsymptoticClass c = classify(g, Rational(0), v);
    expect(c.case_used == 1, "classification case " + std::to_string(c.case_used));
  }
}

void catalan_expansion() {
  auto c = form_of("catalan_inv_n2");
  expect_eq(c.lead, q(1, 4), "lambda");
  expect_eq(c.r, q(-1, 2), "r");
  expect_eq(c.b.at(0), q(9, 8), "b1");
  expect_eq(c.b.at(1), q(17, 128), "b2");
  expect_eq(c.b.at(2), q(3, 1024), "b3");
}

void franel_expansion() {
  auto f = form_of("franel5");
  expect_eq(f.lead, q(32), "lambda");
  expect_eq(f.r, q(-2), "r");
  expect_eq(f.b.at(0), q(-4, 5), "b1");
  // u_n = a_n n^2 / 32^n = C (1 + b1/n + b2/n^2 + O(n^-3)); u_{2n}/u_n eliminates C
  Recurrence rec = corpus("franel5");
  const long n = 2500;
  auto u = [&](long k) {
    mpf_class x(0, 1024);
    x = rec.term(k) * Rational(k * k) / pow(Rational(32), k);
    return x;
  };
  mpf_class quot = u(2 * n) / u(n), b1(-0.8, 1024), nn(n, 1024);
  mpf_class fit = (1 + b1 / (2 * nn) - quot * (1 + b1 / nn)) / (quot / (nn * nn) - 1 / (4 * nn * nn));
  const double b2 = f.b.at(1).to_rational().get_d();
  const double rel = std::abs((fit.get_d() - b2) / b2);
  expect(rel < 1e-4, "numeric fit " + std::to_string(fit.get_d()) + " vs " + std::to_string(b2));
  notes << "  [4] b2 = " << to_string(f.b.at(1)) << " (numeric fit " << fit.get_d()
        << "), i.e. the second-order term is 7/(25n^2); a 7/(25n) term is not matched\n";
}

BoundExpr franel_f() { return {0, {q(32), q(-64), q(603, 5)}, std::nullopt, 1}; }
BoundExpr franel_g() { return {0, {q(32), q(-64), q(613, 5)}, std::nullopt, 1}; }

void franel_bounds() {
  Recurrence rec = corpus("franel5");
  RatioBoundsCert c = certify_bounds(rec, franel_f(), franel_g());
  expect(c.N >= 1 && c.N <= 414, "N = " + std::to_string(c.N));
  expect(ratios_inside(rec, franel_f(), franel_g(), c.N, c.N + 500), "spot check on [N, N+500]");
  notes << "  [5] Franel ratio bounds certified from N = " << c.N << "\n";
}

void franel_residual() {
  TermShape h{0, q(32), -1};
  FRatFunc res = term_residual(h, franel_g().as_ratfunc());
  FRatFunc want(to_field_poly(Poly({Rational(-613), Rational(-293), Rational(160)})),
                to_field_poly(Poly({Rational(0), Rational(0), Rational(5), Rational(5)})));
  expect(res == want, "residual " + res.to_string());
  EventualSign s = sign_eventual(res);
  expect(s.sign == 1 && s.from == 4, "sign (" + std::to_string(s.sign) + ", " + to_string(s.from) + ")");
}

void franel_d3() {
  TermShape h{0, q(32), -1};
  LogRatExpr D = concavity_expr(h, franel_f(), franel_g());
  LogRatExpr D3 = D.derivative(3);
  expect(D3.is_rational(), "third derivative is rational");
  Poly num = parse_poly_coeffs({"81527952168634716", "155552087844136386", "10463853565472148",
                                "181717579054720476", "-30411335131752960", "384356368351451520",
                                "197442488881497600", "116628917999616000", "79843811622912000",
                                "49427913441280000", "-24866003025920000", "7604118487040000",
                                "-4945084416000000", "-974336819200000", "67108864000000"});
  Poly den = Poly({Rational(0), Rational(0), Rational(0), Rational(1)}) * Poly({Rational(1), Rational(1)}).pow(2) *
             Poly({Rational(453), Rational(0), Rational(160)}).pow(3) *
             Poly({Rational(603), Rational(-320), Rational(160)}).pow(3);
  expect(D3.rational() == FRatFunc(to_field_poly(-num), to_field_poly(den)), "D''' differs");
  Integer t = *real_threshold(FRatFunc(to_field_poly(num), FRatFunc::P{FieldElem(1)}));
  expect(t == 19, "root bound " + to_string(t));
  SignCert c = certify_sign(D, -1);
  expect(c.sign == -1 && c.analytic_from <= 19, "analytic threshold " + to_string(c.analytic_from));
  expect(c.from <= 16, "extended threshold " + to_string(c.from));
  expect(replay(c).empty(), "replay");
  notes << "  [7] D <= 0 analytically from " << c.analytic_from << ", pointwise from " << c.from << "\n";
}

void franel_end_to_end() {
  Recurrence rec = corpus("franel5");
  RootLogCert c = certify_root_log(rec, 0, Variant::LogConcave);
  expect(c.N_final == 1, "N_final = " + std::to_string(c.N_final));
  expect(oracle_failures(rec, 1, 450, false).empty(), "oracle failures on [1, 450]");
}

void motzkin_end_to_end() {
  Recurrence rec = corpus("motzkin");
  RootLogCert c = certify_root_log(rec, 0, Variant::RatioLogConvex);
  expect(c.bounds.N >= 1 && c.bounds.N <= 228, "bounds N = " + std::to_string(c.bounds.N));
  expect(ratios_inside(rec, c.bounds.f, c.bounds.g, c.bounds.N, c.bounds.N + 500), "bounds spot check");
  const TermShape& h = c.term_bound.h;
  expect(h.mu0 == 0 && h.lead == q(3) && h.beta == -1, "h = " + h.to_string());
  expect(c.sign_cert.sign == -1 && c.sign_cert.from <= 15, "expression threshold " + to_string(c.sign_cert.from));
  expect(c.N_final == 1, "N_final = " + std::to_string(c.N_final));
  expect(oracle_failures(rec, 1, 240, true).empty(), "oracle failures on [1, 240]");
  notes << "  [9] Motzkin bounds from " << c.bounds.N << ", expression <= 0 from " << c.sign_cert.from << "\n";
}

void catalan_end_to_end() {
  Recurrence base = corpus("catalan_inv");
  RootLogCert c = certify_root_log(base, 2, Variant::LogConcave);
  expect(c.bounds.N == 1, "bounds N = " + std::to_string(c.bounds.N));
  expect(c.bounds.f.exact && c.bounds.g.exact && *c.bounds.f.exact == *c.bounds.g.exact, "f = g = r_n");
  const TermShape& h = c.term_bound.h;
  expect(h.mu0 == 0 && h.lead == q(1, 4) && h.beta == Q(-1, 4), "h = " + h.to_string());
  expect(c.term_bound.induction.has_value(), "h is certified by the log induction");
  LogRatExpr d = c.term_bound.induction->expr.derivative();
  FRatFunc want(to_field_poly(-Poly({Rational(14), Rational(23), Rational(2)})),
                to_field_poly(Poly({Rational(0), Rational(8), Rational(28), Rational(28), Rational(8)})));
  expect(d.is_rational() && d.rational() == want, "D' = " + d.to_string());
  expect(c.sign_cert.sign == -1 && c.sign_cert.from <= 26, "expression threshold " + to_string(c.sign_cert.from));

  // exact scan of window starts 2..60 on b_n = a_n / n^2, against the oracle
  Recurrence b = shift_by_power(base, 2);
  RangeReport scan = check_root_logconcave(b, 0, 2, 60);
  std::vector<long> fails = oracle_failures(b, 2, 60, false);
  expect(scan.failures == fails, "exact scan disagrees with the oracle");
  const long start = fails.empty() ? 2 : fails.back() + 1;
  for (long m = start; m <= 60; ++m) expect(!std::count(fails.begin(), fails.end(), m), "failure after the start");
  expect(start == 19 && c.N_final == 19, "minimal start " + std::to_string(start));
  notes << "  [10] failing windows (b_m, b_{m+1}, b_{m+2}) with m in [2, 60]: " << list(fails) << "\n"
        << "       log-concave from window start m = " << start << " (centre n = " << start + 1
        << "); a start at 6 is contradicted by the exact scan\n";
}

void property_suite() {
  // series round trips
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  for (int t = 0; t < 20; ++t) {
    std::vector<FieldElem> c{FieldElem(1)};
    for (int k = 1; k <= 6; ++k) c.push_back(q(num(rng), den(rng)));
    PSeries a = PSeries::from_coeffs(c);
    expect((a * recip(a)).agrees_with(PSeries::constant(q(1), 6), 6), "a * recip(a) = 1");
    expect(exp(log(a)).agrees_with(a, 6), "exp(log(a)) = a");
    FieldElem w = q(num(rng), den(rng));
    expect(a.shift(1, w).shift(-1, w).agrees_with(a, 5), "shift and back");
  }

  // delta expansion against the term-by-term assembly (rho = 1)
  for (int t = 0; t < 8; ++t) {
    const int M = 5, K = M + 1;
    AsymptoticForm f;
    f.mu0 = Q(num(rng), den(rng));
    f.rho = 1;
    f.lead = FieldElem(1);
    f.r = q(num(rng), den(rng));
    f.M = M;
    for (int k = 1; k <= M; ++k) f.log_b.push_back(q(num(rng), den(rng)));
    f.b = f.log_b;
    auto second_difference = [](const PSeries& x, const FieldElem& w) {
      return x.shift(1, w) + x.shift(-1, w) - x * q(2);
    };
    PSeries one = PSeries::constant(q(1), K, 1), logn(1, K);
    logn.set(0, q(0), q(1));
    PSeries sum = log(PSeries::constant(q(1), K, 1) - one.times_power(2).truncate(K)) * FieldElem(f.mu0);
    sum += second_difference(logn, q(-1)).times_power(1).truncate(K) * f.r;
    for (int s = 1; s <= M; ++s)
      sum += second_difference(one, -(q(1) + q(s))).times_power(1 + s).truncate(K) * f.log_b[static_cast<std::size_t>(s - 1)];
    expect(delta_expansion(f, Variant::LogConcave, K).agrees_with(sum, K), "delta expansion assembly");
  }

  // the ratio expansion solves the recurrence to its order
  for (const auto& name : corpus_names()) {
    Recurrence rec = corpus(name);
    for (const auto& branch : expand_ratio(rec, 6)) {
      PSeries res = ratio_residual(rec, branch);
      expect(res.valuation() > res.order(), "ratio residual order for " + name);
    }
  }

  // exact and interval comparisons agree, including the overlap band
  Recurrence fr = corpus("franel5");
  VerifyConfig small;
  small.bits_budget = 1L << 14;
  expect(check_root_logconcave(fr, 0, 1, 300).failures == check_root_logconcave(fr, 0, 1, 300, small).failures,
         "exact vs interval");
  Recurrence mo = corpus("motzkin");
  expect(check_root_ratio_logconvex(mo, 0, 1, 200).failures ==
             check_root_ratio_logconvex(mo, 0, 1, 200, small).failures,
         "exact vs interval (ratio)");

  // sign certificates replay, and a forged threshold does not
  SignCert s = certify_sign(concavity_expr(TermShape{0, q(32), -1}, franel_f(), franel_g()), -1);
  expect(replay(s).empty(), "replay");
  SignCert forged = s;
  forged.chain.front().threshold = 5;
  expect(!replay(forged).empty(), "forged threshold accepted");
  forged = s;
  forged.from = 2;
  expect(!replay(forged).empty(), "forged extension accepted");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"Motzkin expansion", motzkin_expansion},
      {"G_n expansion and classification", gn_expansion},
      {"Catalan-inverse expansion", catalan_expansion},
      {"Franel-5 expansion", franel_expansion},
      {"Franel-5 ratio bounds", franel_bounds},
      {"Franel-5 term-bound residual", franel_residual},
      {"Franel-5 third derivative and sign certificate", franel_d3},
      {"Franel-5 log-concavity end to end", franel_end_to_end},
      {"Motzkin ratio log-convexity end to end", motzkin_end_to_end},
      {"Catalan inverse over n^2 end to end", catalan_end_to_end},
      {"property suite", property_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      criteria[i].second();
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char line[256];
    std::snprintf(line, sizeof line, "%s  %2zu  %-48s %7.1fs", why.empty() ? "PASS" : "FAIL", i + 1,
                  criteria[i].first.c_str(), secs);
    std::cout << line << (why.empty() ? "" : "  -- " + why) << std::endl;
    failed += !why.empty();
  }
  std::cout << "\n" << notes.str() << "\n" << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
