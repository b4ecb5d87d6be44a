#include <cmath>

#include "doctest.h"
#include "rootlog/asymptotics.hpp"
#include "rootlog/bounds.hpp"
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

// f(n) <= a_{n+1}/a_n <= g(n) on [lo, hi], comparing exact rationals; f and g
// given as plain rational coefficient lists c_0 + c_1/n + ...
bool ratios_inside(const Recurrence& rec, const std::vector<Rational>& f, const std::vector<Rational>& g, long lo, long hi) {
  auto eval = [](const std::vector<Rational>& c, long n) {
    Rational s = 0, p = 1;
    for (const auto& x : c) {
      s += x * p;
      p /= n;
    }
    return s;
  };
  for (long n = lo; n <= hi; ++n) {
    Rational r = rec.term(n + 1) / rec.term(n);
    if (r < eval(f, n) || r > eval(g, n)) return false;
  }
  return true;
}

std::vector<Rational> rational_coeffs(const BoundExpr& b) {
  std::vector<Rational> out;
  for (const auto& c : b.coeffs) out.push_back(c.to_rational());
  return out;
}

}  // namespace

TEST_CASE("candidate bounds perturb the last kept coefficient") {
  auto fr = expand_ratio(corpus("franel5"), 6).front();
  auto [f, g] = make_candidate_bounds(fr, 2, 1);
  CHECK(rational_coeffs(f) == std::vector<Rational>{32, -64, Q(603, 5)});
  CHECK(rational_coeffs(g) == std::vector<Rational>{32, -64, Q(613, 5)});

  auto mo = expand_ratio(corpus("motzkin"), 6).front();
  auto [mf, mg] = make_candidate_bounds(mo, 3, 1);
  CHECK(mf.coeffs.back().to_rational() == Q(-157, 4));
  CHECK(mg.coeffs.back().to_rational() == Q(-149, 4));
  CHECK(mf.coeffs[1].to_rational() == Q(-9, 2));
}

TEST_CASE("slack must be positive") {
  auto fr = expand_ratio(corpus("franel5"), 6).front();
  CHECK_THROWS_AS(make_candidate_bounds(fr, 2, 0), Error);
  CHECK_THROWS_AS(make_candidate_bounds(fr, 2, -1), Error);
}

TEST_CASE("Franel bounds hold from at most 414") {
  Recurrence rec = corpus("franel5");
  auto [f, g] = make_candidate_bounds(expand_ratio(rec, 6).front(), 2, 1);
  RatioBoundsCert c = certify_bounds(rec, f, g);
  CHECK(c.N <= 414);
  CHECK(c.N >= 1);
  for (const auto& s : c.steps) CHECK(s.sign.sign >= 0);
  for (const auto& b : c.base) CHECK(b.pass);
  CHECK(ratios_inside(rec, {32, -64, Q(603, 5)}, {32, -64, Q(613, 5)}, c.N, c.N + 500));
}

TEST_CASE("Motzkin bounds hold from 228") {
  Recurrence rec = corpus("motzkin");
  auto [f, g] = make_candidate_bounds(expand_ratio(rec, 6).front(), 3, 1);
  RatioBoundsCert c = certify_bounds(rec, f, g);
  CHECK(c.N == 228);
  CHECK(ratios_inside(rec, rational_coeffs(f), rational_coeffs(g), 228, 728));
}

TEST_CASE("order-one recurrences use the exact ratio") {
  Recurrence rec = shift_by_power(corpus("catalan_inv"), 2);
  BoundExpr r = exact_ratio_bound(rec);
  RatioBoundsCert c = certify_bounds(rec, r, r);
  CHECK(c.N == 1);
  // r_n = n^2 (n+2) / (2 (2n+1) (n+1)^2)
  for (long n = 1; n <= 60; ++n) {
    Rational expect = Q(n * n * (n + 2), 2 * (2 * n + 1) * (n + 1) * (n + 1));
    CHECK(r.eval(Rational(n)).to_rational() == expect);
    CHECK(rec.term(n + 1) / rec.term(n) == expect);
  }
}

TEST_CASE("the gap g - f is positive") {
  for (const char* name : {"franel5", "motzkin", "domb", "apery"}) {
    auto rx = expand_ratio(corpus(name), 6).front();
    for (int depth : {2, 3}) {
      auto [f, g] = make_candidate_bounds(rx, depth, Q(1, 2));
      for (long n : {1L, 2L, 10L, 1000L, 1000000L}) CHECK(compare(g.eval(Rational(n)), f.eval(Rational(n))) > 0);
    }
  }
}

TEST_CASE("certified bounds are sound for every slack") {
  Recurrence rec = corpus("motzkin");
  auto rx = expand_ratio(rec, 6).front();
  for (Rational slack : {Q(1, 2), Q(1), Q(2), Q(4)}) {
    auto [f, g] = make_candidate_bounds(rx, 3, slack);
    RatioBoundsCert c = certify_bounds(rec, f, g);
    CAPTURE(slack);
    CHECK(ratios_inside(rec, rational_coeffs(f), rational_coeffs(g), c.N, c.N + 300));
  }
}

TEST_CASE("algebraic bounds (central Delannoy)") {
  Recurrence rec = corpus("delannoy");
  auto [f, g] = make_candidate_bounds(expand_ratio(rec, 6).front(), 2, 1);
  RatioBoundsCert c = certify_bounds(rec, f, g);
  for (long n = c.N; n <= c.N + 200; ++n) {
    FieldElem r(rec.term(n + 1) / rec.term(n));
    CHECK(compare(f.eval(Rational(n)), r) <= 0);
    CHECK(compare(r, g.eval(Rational(n))) <= 0);
  }
}

TEST_CASE("a cap below the induction threshold is reported") {
  Recurrence rec = corpus("franel5");
  auto [f, g] = make_candidate_bounds(expand_ratio(rec, 6).front(), 2, 1);
  CHECK_THROWS_AS(certify_bounds(rec, f, g, 100), StageError);
}

TEST_CASE("term shape values") {
  TermShape h{0, FieldElem(32), -1};
  CHECK(*h.exact_value(3) == Q(32 * 32 * 32, 3));
  TermShape q{0, FieldElem(Q(1, 4)), Q(-1, 4)};
  CHECK_FALSE(q.exact_value(3).has_value());
  Interval v = q.log_value(16, 128);  // log(4^-16 * 16^(-1/4)) = -33 log 2
  CHECK(v.mid() == doctest::Approx(-33 * std::log(2.0)));
}
