#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "rootlog/certify.hpp"
#include "rootlog/error.hpp"
#include "rootlog/spec_io.hpp"

using namespace rootlog;

namespace {

Recurrence corpus(const std::string& name) { return load_spec("corpus:" + name).to_recurrence(); }

Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

FPoly FP(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return to_field_poly(Poly(std::move(v)));
}

BoundExpr franel_f() { return {0, {FieldElem(32), FieldElem(-64), FieldElem(Q(603, 5))}, std::nullopt, 1}; }
BoundExpr franel_g() { return {0, {FieldElem(32), FieldElem(-64), FieldElem(Q(613, 5))}, std::nullopt, 1}; }
TermShape franel_h() { return {0, FieldElem(32), -1}; }

std::pair<BoundExpr, BoundExpr> motzkin_bounds() {
  return make_candidate_bounds(expand_ratio(corpus("motzkin"), 6).front(), 3, 1);
}
TermShape motzkin_h() { return {0, FieldElem(3), -1}; }

Recurrence catalan_b() { return shift_by_power(corpus("catalan_inv"), 2); }
TermShape catalan_h() { return {0, FieldElem(Q(1, 4)), Q(-1, 4)}; }

}  // namespace

TEST_CASE("Franel term residual") {
  FRatFunc g = franel_g().as_ratfunc();
  FRatFunc res = term_residual(franel_h(), g);
  CHECK(res == FRatFunc(FP({-613, -293, 160}), FP({0, 0, 5, 5})));
  EventualSign s = sign_eventual(res);
  CHECK(s.sign == 1);
  CHECK(s.from == 4);
  // independent: 32 (n/(n+1)) - g(n) at a few points
  for (long n : {4L, 5L, 50L, 1000L}) {
    Rational direct = Rational(32) * Q(n, n + 1) - (Rational(32) - Q(64, n) + Q(613, 5 * n * n));
    CHECK(sign_at(res, Rational(n)) == sgn(direct));
    CHECK(direct > 0);
  }
  CHECK(Rational(32) * Q(3, 4) - (Rational(32) - Q(64, 3) + Q(613, 45)) < 0);
}

TEST_CASE("term residual needs a rational step") {
  FRatFunc g = FRatFunc::constant(FieldElem(4));
  CHECK_THROWS_AS(term_residual(catalan_h(), g), Error);
  CHECK_NOTHROW(term_log_step(catalan_h(), g));
}

TEST_CASE("Franel D''' from the window expression") {
  LogRatExpr D = concavity_expr(franel_h(), franel_f(), franel_g());
  LogRatExpr D3 = D.derivative(3);
  REQUIRE(D3.is_rational());
  Poly num = parse_poly_coeffs({"81527952168634716", "155552087844136386", "10463853565472148",
                                "181717579054720476", "-30411335131752960", "384356368351451520",
                                "197442488881497600", "116628917999616000", "79843811622912000",
                                "49427913441280000", "-24866003025920000", "7604118487040000",
                                "-4945084416000000", "-974336819200000", "67108864000000"});
  Poly n3 = Poly({Rational(0), Rational(0), Rational(0), Rational(1)});
  Poly den = n3 * Poly({Rational(1), Rational(1)}).pow(2) * Poly({Rational(453), Rational(0), Rational(160)}).pow(3) *
             Poly({Rational(603), Rational(-320), Rational(160)}).pow(3);
  CHECK(D3.rational() == FRatFunc(to_field_poly(-num), to_field_poly(den)));
  CHECK(*real_threshold(FRatFunc(to_field_poly(num), FP({1}))) == 19);

  SignCert c = certify_sign(D, -1);
  CHECK(c.sign == -1);
  CHECK(c.analytic_from <= 19);
  CHECK(c.from <= 16);
  CHECK(c.chain.front().order == 3);
  CHECK(c.chain.front().sign == -1);
  CHECK(replay(c).empty());
  // D(15) > 0, so 16 is as low as it goes
  CHECK(D.eval(Rational(15), 256).certainly_positive());
  CHECK(c.from == 16);
}

TEST_CASE("Catalan h-induction derivative") {
  FRatFunc g = exact_ratio_bound(catalan_b()).as_ratfunc();
  LogRatExpr step = term_log_step(catalan_h(), g);
  LogRatExpr d = step.derivative();
  REQUIRE(d.is_rational());
  CHECK(d.rational() == FRatFunc(-FP({14, 23, 2}), FP({0, 8, 28, 28, 8})));
  SignCert c = certify_sign(step, +1, 2);
  CHECK(c.sign == 1);
  CHECK(replay(c).empty());
}

TEST_CASE("Catalan D(n) <= 0 from at most 26") {
  BoundExpr r = exact_ratio_bound(catalan_b());
  SignCert c = certify_sign(concavity_expr(catalan_h(), r, r), -1);
  CHECK(c.sign == -1);
  CHECK(c.from <= 26);
  CHECK(replay(c).empty());
}

TEST_CASE("Motzkin ratio window expression <= 0 from at most 15") {
  auto [f, g] = motzkin_bounds();
  SignCert c = certify_sign(ratio_convexity_expr(motzkin_h(), f, g), -1, 2);
  CHECK(c.sign == -1);
  CHECK(c.from <= 15);
  CHECK(c.chain.front().order <= 4);
  CHECK(replay(c).empty());

  // the opposite sign is refused rather than certified
  CHECK_THROWS_AS(certify_sign(ratio_convexity_expr(motzkin_h(), f, g), +1, 2), Error);
}

TEST_CASE("derivative chains stay short") {
  for (const char* name : {"franel5", "apery", "domb"}) {
    Recurrence rec = corpus(name);
    auto rx = expand_ratio(rec, 6).front();
    AsymptoticForm form = to_asymptotic_form(rx);
    TermShape h{form.mu0, form.lead, floor_of(form.r.to_rational()) + 1};
    auto [f, g] = make_candidate_bounds(rx, 2, 1);
    CAPTURE(name);
    SignCert c = certify_sign(concavity_expr(h, f, g), -1, 2);
    CHECK(c.chain.front().order <= 3);
  }
}

TEST_CASE("trivial sign certificates") {
  SignCert z = certify_sign(LogRatExpr(), -1);
  CHECK(z.sign == 0);
  CHECK(replay(z).empty());

  LogRatExpr e;  // log(1 + 1/n)
  e.add_log(Poly({Rational(1)}), FRatFunc(FP({1, 1}), FP({0, 1})));
  SignCert c = certify_sign(e, +1);
  CHECK(c.sign == 1);
  CHECK(c.from == 1);
  CHECK(replay(c).empty());

  LogRatExpr r(FRatFunc(FP({-5, 1}), FP({1})));  // n - 5
  SignCert p = certify_sign(r, +1);
  CHECK(p.sign == 1);
  CHECK(p.from == 6);
}

TEST_CASE("replay rejects tampered certificates") {
  SignCert c = certify_sign(concavity_expr(franel_h(), franel_f(), franel_g()), -1);
  REQUIRE(replay(c).empty());

  SignCert t = c;
  t.chain.front().threshold = 5;
  CHECK_FALSE(replay(t).empty());

  t = c;
  t.from = 3;
  CHECK_FALSE(replay(t).empty());

  t = c;
  t.chain.back().sign = -t.chain.back().sign;
  CHECK_FALSE(replay(t).empty());

  t = c;
  t.expr = -t.expr;
  CHECK_FALSE(replay(t).empty());
}

TEST_CASE("window expressions with the true terms are the scaled window sums") {
  // replacing h_n by a_n and f = g = r_n, the expressions become
  // n(n+1)(n+2)(L_n - 2L_{n+1} + L_{n+2}) and (n-1)n(n+1)(n+2)(L_{n-1} - 3L_n + 3L_{n+1} - L_{n+2})
  Recurrence rec = catalan_b();
  BoundExpr r = exact_ratio_bound(rec);
  TermShape h = catalan_h();
  LogRatExpr e31 = concavity_expr(h, r, r), e34 = ratio_convexity_expr(h, r, r);
  const long prec = 512;
  auto mid = [&](const Interval& x) {
    oracle::Real m(prec);
    mpfr_add(m.get(), x.lo(), x.hi(), MPFR_RNDN);
    mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
    return m;
  };
  // e(n) - k log h_n + k log a_n - scale * sum w_j L_{n+j+shift}, which must vanish
  auto residual = [&](const LogRatExpr& e, long k, long n, long shift, const std::vector<long>& w, long scale) {
    oracle::Real v = mid(e.eval(Rational(n), prec)), t(prec);
    mpfr_sub(v.get(), v.get(), mid(h.log_value(n, prec)).get(), MPFR_RNDN);
    oracle::Real la = oracle::log_root(rec.term(n), 1, prec);
    mpfr_sub(t.get(), la.get(), mid(h.log_value(n, prec)).get(), MPFR_RNDN);
    mpfr_mul_si(t.get(), t.get(), k - 1, MPFR_RNDN);
    mpfr_add(v.get(), v.get(), t.get(), MPFR_RNDN);
    mpfr_add(v.get(), v.get(), la.get(), MPFR_RNDN);
    for (std::size_t j = 0; j < w.size(); ++j) {
      const long m = n + shift + static_cast<long>(j);
      oracle::Real L = oracle::log_root(rec.term(m), m, prec);
      mpfr_mul_si(L.get(), L.get(), w[j] * scale, MPFR_RNDN);
      mpfr_sub(v.get(), v.get(), L.get(), MPFR_RNDN);
    }
    return std::abs(mpfr_get_d(v.get(), MPFR_RNDN));
  };
  for (long n = 2; n <= 51; ++n) {
    CAPTURE(n);
    CHECK(residual(e31, 2, n, 0, {1, -2, 1}, n * (n + 1) * (n + 2)) < 1e-60);
    CHECK(residual(e34, 6, n, -1, {1, -3, 3, -1}, (n - 1) * n * (n + 1) * (n + 2)) < 1e-60);
  }
}

TEST_CASE("analytic threshold") {
  CHECK(analytic_threshold(Variant::LogConcave, 16, 414, 414) == 414);
  CHECK(analytic_threshold(Variant::LogConcave, 26, 14, 1) == 26);
  CHECK(analytic_threshold(Variant::RatioLogConvex, 15, 228, 228) == 228);
  CHECK(analytic_threshold(Variant::RatioLogConvex, 30, 1, 1) == 29);
}

TEST_CASE("Catalan inverse over n^2 end to end") {
  RootLogCert c = certify_root_log(corpus("catalan_inv"), 2, Variant::LogConcave);
  CHECK(c.folded_alpha == 2);
  CHECK(c.bounds.N == 1);
  CHECK(c.sign_cert.from <= 26);
  CHECK(c.N_final == 19);
  std::vector<long> expect;
  for (long m = 1; m <= 18; ++m) expect.push_back(m);
  CHECK(c.initial_exceptions == expect);
  CHECK(oracle::root_failures(catalan_b().terms(70), catalan_b().start(), 1, 60, false) == expect);
}

TEST_CASE("pipeline rejections") {
  // root sequence of 2^n n^2 ... mu0 = 0 with r = 2 > alpha: log-convex in the limit
  Recurrence up("up", {Poly({Rational(-2), Rational(-4), Rational(-2)}), Poly({Rational(0), Rational(0), Rational(1)})},
                {Rational(2)}, 1);
  CHECK_THROWS_AS(certify_root_log(up, 0, Variant::LogConcave), NotApplicable);
  CHECK_THROWS_AS(certify_root_log(corpus("franel5"), 0, Variant::LogConcave,
                                   [] { CertifyConfig c; c.max_n = 100; return c; }()),
                  StageError);
}
