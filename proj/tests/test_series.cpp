#include <random>

#include "doctest.h"
#include "rootlog/form.hpp"
#include "rootlog/lograt.hpp"
#include "rootlog/series.hpp"

using namespace rootlog;

namespace {

FieldElem q(long a, long b = 1) {
  Rational x(a, b);
  x.canonicalize();
  return FieldElem(x);
}

FPoly FP(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return to_field_poly(Poly(std::move(v)));
}

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

FRatFunc R(std::initializer_list<long> num, std::initializer_list<long> den) { return FRatFunc(FP(num), FP(den)); }

FieldPtr sqrt2_field() {
  Rational dummy;
  static FieldPtr K = make_field(P({-2, 0, 1}), Rational(1), Rational(2), &dummy);
  return K;
}

PSeries random_unit_series(std::mt19937& rng, int order, bool with_field, bool with_log) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  PSeries s(1, order);
  s.set(0, FieldElem(1));
  for (int k = 1; k <= order; ++k) {
    FieldElem c = q(num(rng), den(rng));
    if (with_field && k % 2 == 1) c = c + FieldElem::theta(sqrt2_field()) * q(num(rng), den(rng));
    FieldElem l = (with_log && k == 1) ? q(num(rng), den(rng)) : FieldElem(0);
    s.set(k, c, l);
  }
  return s;
}

bool coeff_is(const PSeries& s, int k, const FieldElem& c0, const FieldElem& c1 = FieldElem(0)) {
  return s.coeff(k).c0 == c0 && s.coeff(k).c1 == c1;
}

AsymptoticForm toy_form(Rational mu0, Rational r, int M = 4) {
  AsymptoticForm f;
  f.mu0 = mu0;
  f.rho = 1;
  f.lead = FieldElem(1);
  f.r = FieldElem(r);
  f.M = M;
  f.b.assign(static_cast<std::size_t>(M), FieldElem(0));
  f.log_b.assign(static_cast<std::size_t>(M), FieldElem(0));
  return f;
}

}  // namespace

TEST_CASE("series arithmetic") {
  PSeries p = PSeries::from_coeffs({q(1), q(1), q(0)}) * PSeries::from_coeffs({q(1), q(-1), q(0)});
  CHECK(p.order() == 2);
  CHECK(coeff_is(p, 0, q(1)));
  CHECK(coeff_is(p, 1, q(0)));
  CHECK(coeff_is(p, 2, q(-1)));

  PSeries r = recip(PSeries::from_coeffs({q(1), q(-1), q(0), q(0)}));
  for (int k = 0; k <= 3; ++k) CHECK(coeff_is(r, k, q(1)));

  PSeries g = PSeries::from_coeffs({q(1), q(11, 24), q(0)});
  PSeries g2 = g * g;
  CHECK(coeff_is(g2, 1, q(11, 12)));
  CHECK(coeff_is(g2, 2, q(121, 576)));
  CHECK_THROWS(recip(PSeries::from_coeffs({q(0), q(1)})));
}

TEST_CASE("series logarithm") {
  PSeries l = log(PSeries::from_coeffs({q(1), q(1), q(0), q(0)}));
  CHECK(coeff_is(l, 0, q(0)));
  CHECK(coeff_is(l, 1, q(1)));
  CHECK(coeff_is(l, 2, q(-1, 2)));
  CHECK(coeff_is(l, 3, q(1, 3)));
  PSeries l2 = log(PSeries::from_coeffs({q(1), q(0), q(-1), q(0), q(0)}));
  CHECK(coeff_is(l2, 2, q(-1)));
  CHECK(coeff_is(l2, 3, q(0)));
  CHECK(coeff_is(l2, 4, q(-1, 2)));
  CHECK(log(PSeries::constant(q(1), 3)).valuation() == 4);
  CHECK_THROWS(log(PSeries::constant(q(2), 3)));
}

TEST_CASE("series shift") {
  // Second difference of n^w: leading term w(w-1)/n^2, for w = j/rho - 1 and w = -(1 + s/rho).
  for (auto [j, rho] : {std::pair{1, 2}, {1, 3}, {2, 3}, {0, 1}}) {
    FieldElem w = q(j, rho) - q(1);
    PSeries one = PSeries::constant(q(1), 6 * rho, rho);
    PSeries d = one.shift(1, w) + one.shift(-1, w) - one * q(2);
    CHECK(d.valuation() == 2 * rho);
    CHECK(coeff_is(d, 2 * rho, (q(j, rho) - q(1)) * (q(j, rho) - q(2))));
  }
  for (int s = 0; s < 4; ++s) {
    FieldElem w = -(q(1) + q(s, 2));
    PSeries one = PSeries::constant(q(1), 12, 2);
    PSeries d = one.shift(1, w) + one.shift(-1, w) - one * q(2);
    CHECK(coeff_is(d, 4, (q(1) + q(s, 2)) * (q(2) + q(s, 2))));
  }
  PSeries x = PSeries::from_coeffs({q(1), q(3), q(-2)});
  CHECK(x.shift(0, q(5)).agrees_with(x, 2));
}

TEST_CASE("delta expansion leading terms") {
  PSeries d1 = delta_expansion(toy_form(1, 0), Variant::LogConcave, 4);
  CHECK(d1.valuation() == 2);
  CHECK(coeff_is(d1, 2, q(-1)));

  PSeries d2 = delta_expansion(toy_form(0, Rational(-3, 2)), Variant::LogConcave, 4);
  CHECK(d2.valuation() == 3);
  CHECK(coeff_is(d2, 3, q(9, 2), q(-3)));

  PSeries d3 = delta_expansion(toy_form(1, 0), Variant::RatioLogConvex, 4);
  CHECK(d3.valuation() == 3);
  CHECK(coeff_is(d3, 3, q(-2)));
}

TEST_CASE("log-rational expressions") {
  LogRatExpr e;
  e.add_log(P({1}), R({0, 1}, {1}));
  LogRatExpr d = e.derivative();
  CHECK(d.is_rational());
  CHECK(d.rational() == R({1}, {0, 1}));

  // log h_{n+1} - log(g_n h_n) for h_n = 4^{-n} n^{-1/4} and g_n = n^2(n+2)/(2(2n+1)(n+1)^2).
  FieldElem four(4);
  FRatFunc g = R({0, 0, 2, 1}, {2, 8, 10, 4});
  LogRatExpr D;
  D.add_log(Poly({Rational(-1, 4)}), R({1, 1}, {1}));
  D.add_log(Poly({Rational(-1)}), FRatFunc::constant(four));
  D.add_log(Poly({Rational(-1)}), g);
  D.add_log(Poly({Rational(1, 4)}), R({0, 1}, {1}));
  LogRatExpr D1 = D.derivative();
  REQUIRE(D1.is_rational());
  CHECK(D1.rational() == R({-14, -23, -2}, {0, 8, 28, 28, 8}));
  CHECK(D.limit().is_zero());

  LogRatExpr e2;
  e2.add_log(P({1}), R({1, 1}, {0, 1}));
  CHECK(e2.limit().is_zero());
  CHECK(e2.eval(Rational(1), 128).certainly_positive());
}

TEST_CASE("Franel D third derivative") {
  // D(n) = 2 log h_n + n(n+1) log g_{n+1} - n(n+3) log f_n with h_n = 32^n / n.
  FRatFunc f = R({603, -320, 160}, {0, 0, 5});
  FRatFunc g = R({613, -320, 160}, {0, 0, 5});
  LogRatExpr D;
  D.add_log(P({0, 2}), FRatFunc::constant(FieldElem(32)));
  D.add_log(P({-2}), R({0, 1}, {1}));
  D.add_log(P({0, 1, 1}), g.shift(FieldElem(1)));
  D.add_log(P({0, -3, -1}), f);
  CHECK(D.limit().kind == Limit::MinusInfinity);
  CHECK(D.derivative().limit().is_zero());
  CHECK(D.derivative(2).limit().is_zero());
  LogRatExpr D3 = D.derivative(3);
  REQUIRE(D3.is_rational());
  Poly num = parse_poly_coeffs({"81527952168634716", "155552087844136386", "10463853565472148",
                                "181717579054720476", "-30411335131752960", "384356368351451520",
                                "197442488881497600", "116628917999616000", "79843811622912000",
                                "49427913441280000", "-24866003025920000", "7604118487040000",
                                "-4945084416000000", "-974336819200000", "67108864000000"});
  Poly den = P({0, 0, 0, 1}) * P({1, 1}).pow(2) * P({453, 0, 160}).pow(3) * P({603, -320, 160}).pow(3);
  CHECK(D3.rational() == FRatFunc(to_field_poly(-num), to_field_poly(den)));
}

TEST_CASE("log constants") {
  LogConst c = LogConst::log_of(FieldElem(8)) - Rational(3) * LogConst::log_of(FieldElem(2));
  CHECK(c.is_zero());
  LogConst d = LogConst::log_of(FieldElem(Rational(1, 4))) + Rational(2) * LogConst::log_of(FieldElem(2));
  CHECK(d.is_zero());
  LogConst e = LogConst(FieldElem(1)) - LogConst::log_of(FieldElem(3));
  CHECK(e.sign() == -1);
  LogConst s2 = LogConst::log_of(FieldElem::theta(sqrt2_field()));
  CHECK(s2.sign() == 1);
}

TEST_CASE("property: reciprocal and logarithm round trips") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 50; ++t) {
    PSeries a = random_unit_series(rng, 6, t % 3 == 0, false);
    PSeries one = a * recip(a);
    CHECK(one.agrees_with(PSeries::constant(q(1), 6), 6));
  }
  for (int t = 0; t < 30; ++t) {
    PSeries a = random_unit_series(rng, 5, t % 4 == 0, false);
    PSeries b = random_unit_series(rng, 5, t % 4 == 0, false);
    CHECK(log(a * b).agrees_with(log(a) + log(b), 5));
    CHECK(exp(log(a)).agrees_with(a, 5));
  }
}

TEST_CASE("property: shift and back") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    PSeries a = random_unit_series(rng, 6, t % 2 == 0, true);
    FieldElem w = q(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
    CHECK(a.shift(1, w).shift(-1, w).agrees_with(a, 5));
  }
}

TEST_CASE("property: delta expansion equals the term-by-term assembly") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  for (int t = 0; t < 12; ++t) {
    const int rho = 1 + t % 3, M = 5;
    AsymptoticForm f;
    f.mu0 = Rational(num(rng), den(rng));
    f.mu0.canonicalize();
    f.rho = rho;
    f.lead = FieldElem(1);
    for (int j = 1; j < rho; ++j) f.mu.push_back(q(num(rng), den(rng)));
    f.r = q(num(rng), den(rng));
    f.M = M;
    for (int k = 1; k <= M; ++k) f.log_b.push_back(q(num(rng), den(rng)));
    f.b = f.log_b;
    const int K = M + rho;
    PSeries got = delta_expansion(f, Variant::LogConcave, K);

    auto second_difference = [&](const PSeries& x, const FieldElem& w) {
      return x.shift(1, w) + x.shift(-1, w) - x * q(2);
    };
    PSeries one = PSeries::constant(q(1), K, rho);
    PSeries logn(rho, K);
    logn.set(0, q(0), q(1));
    // mu0 * log(1 - 1/n^2)
    PSeries growth_part = log(PSeries::constant(q(1), K, rho) - one.times_power(2 * rho).truncate(K)) * FieldElem(f.mu0);
    PSeries mu_part(rho, K);
    for (int j = 1; j < rho; ++j)
      mu_part += second_difference(one, q(j, rho) - q(1)).times_power(rho - j).truncate(K) * f.mu[static_cast<std::size_t>(j - 1)];
    PSeries r_part = second_difference(logn, q(-1)).times_power(rho).truncate(K) * f.r;
    PSeries b_part(rho, K);
    for (int s = 1; s <= M; ++s)
      b_part += second_difference(one, -(q(1) + q(s, rho))).times_power(rho + s).truncate(K) *
             f.log_b[static_cast<std::size_t>(s - 1)];
    CHECK(got.agrees_with(growth_part + mu_part + r_part + b_part, K));
  }
}

TEST_CASE("property: derivative agrees with a central difference") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(1, 9), m(-4, 4);
  for (int t = 0; t < 20; ++t) {
    LogRatExpr e(FRatFunc(FP({m(rng), m(rng)}), FP({c(rng), 1})));
    for (int k = 0; k < 2; ++k) {
      Poly mult = P({m(rng), m(rng), m(rng)});
      e.add_log(mult, R({c(rng), c(rng), 1}, {c(rng), 1}));
    }
    const long prec = 200;
    Rational n(100), h(1);
    mpq_div_2exp(h.get_mpq_t(), h.get_mpq_t(), 100);
    Interval fd = (e.eval(n + h, prec) - e.eval(n - h, prec)) / Interval(2 * h, prec);
    Interval exact = e.derivative().eval(n, prec);
    Interval diff = fd - exact;
    double rel = std::abs(diff.mid()) / std::max(std::abs(exact.mid()), 1e-300);
    CHECK(rel < 1e-20);
  }
}
