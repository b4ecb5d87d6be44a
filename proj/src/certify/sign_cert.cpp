#include <algorithm>

#include <mpfr.h>

#include "rootlog/certify.hpp"
#include "rootlog/error.hpp"
#include "rootlog/sign.hpp"

namespace rootlog {

namespace {

constexpr int max_derivatives = 6;
constexpr long search_cap = 1L << 40;

// Certified sign of e(n), or 0 when undecided up to max_prec.
PointCheck sign_at_point(const LogRatExpr& e, long n, long max_prec = 1L << 20) {
  if (e.is_rational()) return {n, sign_at(e.rational(), Rational(n)), 0};
  for (long prec = 128; prec <= max_prec; prec *= 2) {
    Interval v = e.eval(Rational(n), prec);
    if (v.certainly_positive()) return {n, 1, prec};
    if (v.certainly_negative()) return {n, -1, prec};
  }
  return {n, 0, max_prec};
}

// First integer n >= lo with sign(e(n)) == s, for e monotone on [lo, inf) and
// eventually of sign s.
long first_point_with_sign(const LogRatExpr& e, long lo, int s) {
  auto ok = [&](long n) { return sign_at_point(e, n, 1L << 12).sign == s; };
  if (ok(lo)) return lo;
  long bad = lo, step = 1;
  long good = -1;
  while (lo + step <= search_cap) {
    if (ok(lo + step)) {
      good = lo + step;
      break;
    }
    bad = lo + step;
    step *= 2;
  }
  if (good < 0) throw StageError("sign", "no sign change found below " + std::to_string(search_cap));
  while (good - bad > 1) {
    long mid = bad + (good - bad) / 2;
    (ok(mid) ? good : bad) = mid;
  }
  return good;
}

std::string side_rule(int deriv_sign, const Limit& L) {
  return std::string(deriv_sign < 0 ? "decreasing" : "increasing") + " with limit " + L.to_string();
}

}  // namespace

SignCert certify_sign(const LogRatExpr& expr, int want, long floor) {
  if (want != 1 && want != -1) throw Error("certify_sign wants +1 or -1");
  SignCert c;
  c.expr = expr;
  c.want = want;
  const Integer base = std::max(Integer(floor), expr.valid_from());
  if (expr.is_zero()) {
    c.analytic_from = c.from = base;
    c.chain.push_back({0, "0", 0, base, std::nullopt, "identically zero"});
    return c;
  }

  if (expr.is_rational()) {
    EventualSign s = sign_eventual(expr.rational(), base);
    c.chain.push_back({0, expr.to_string(), s.sign, s.from, std::nullopt, "rational: root bound, then exact evaluation"});
    c.sign = s.sign;
    c.analytic_from = s.from;
  } else {
    const int k = expr.max_multiplier_degree() + 1;
    if (k > max_derivatives)
      throw StageError("sign", "log multipliers of degree " + std::to_string(k - 1) + " need more than " +
                                   std::to_string(max_derivatives) + " derivatives");
    std::vector<LogRatExpr> d{expr};
    for (int j = 1; j <= k; ++j) d.push_back(d.back().derivative());
    if (!d[static_cast<std::size_t>(k)].is_rational()) throw Error("derivative chain did not rationalize");

    // half-line free of roots and poles of the log arguments and of poles of every derivative
    Integer T = base;
    for (const auto& t : expr.terms()) T = std::max(T, *real_threshold(t.arg));
    for (int j = 0; j < k; ++j) T = std::max(T, poly_threshold(d[static_cast<std::size_t>(j)].rational().den()));
    const FRatFunc& top = d[static_cast<std::size_t>(k)].rational();
    int s = 0;
    if (!top.is_zero()) {
      T = std::max(T, *real_threshold(top));
      s = sign_at(top, Rational(T));
    }
    c.chain.push_back({k, top.to_string(), s, T, std::nullopt, "rational: no real roots or poles beyond the threshold"});

    for (int j = k - 1; j >= 0; --j) {
      const LogRatExpr& e = d[static_cast<std::size_t>(j)];
      Limit L = e.limit();
      ChainStep step{j, e.to_string(), 0, T, L, ""};
      if (s == 0) {
        if (L.kind != Limit::Finite) throw StageError("sign", "constant function with infinite limit");
        step.sign = L.sign();
        step.rule = "constant, equal to its limit";
      } else if ((s < 0 && L.kind == Limit::PlusInfinity) || (s > 0 && L.kind == Limit::MinusInfinity)) {
        throw StageError("sign", "monotonicity contradicts the limit at order " + std::to_string(j));
      } else if (L.kind == Limit::Finite && (s < 0 ? L.sign() >= 0 : L.sign() <= 0)) {
        step.sign = -s;
        step.rule = side_rule(s, L) + ": stays on the far side of the limit";
      } else {
        // monotone towards a limit on the other side of zero: the sign flips once
        const int target = L.sign();
        step.sign = target;
        step.threshold = first_point_with_sign(e, to_long(T), target);
        step.rule = side_rule(s, L) + ": sign reached at n = " + to_string(step.threshold) + " and kept";
      }
      s = step.sign;
      T = step.threshold;
      c.chain.push_back(step);
    }
    c.sign = s;
    c.analytic_from = T;
  }

  if (c.sign != 0 && c.sign != want)
    throw StageError("sign", std::string("expression is eventually ") + (c.sign > 0 ? "positive" : "negative") +
                                 "; the bounds or the term bound are too weak");
  c.boundary = sign_at_point(expr, to_long(c.analytic_from));
  c.from = c.analytic_from;
  if (c.sign != 0) {
    for (long n = to_long(c.analytic_from) - 1; n >= floor && Integer(n) >= expr.valid_from(); --n) {
      PointCheck p;
      try {
        p = sign_at_point(expr, n);
      } catch (const std::domain_error&) {
        break;
      }
      if (p.sign != want) break;
      c.extension.push_back(p);
      c.from = n;
    }
  }
  return c;
}

std::string replay(const SignCert& cert) {
  const LogRatExpr& expr = cert.expr;
  if (cert.chain.empty()) return "empty derivative chain";
  const ChainStep& top = cert.chain.front();
  std::vector<LogRatExpr> d{expr};
  for (int j = 1; j <= top.order; ++j) d.push_back(d.back().derivative());
  const LogRatExpr& te = d[static_cast<std::size_t>(top.order)];
  if (!te.is_rational()) return "top of the chain is not rational";
  if (!te.rational().is_zero()) {
    Integer rt = *real_threshold(te.rational());
    if (top.order == 0) {
      // integer thresholds: every integer up to the root bound is checked exactly
      for (Integer n = top.threshold; n <= rt; ++n)
        if (sign_at(te.rational(), Rational(n)) != top.sign) return "rational sign fails at n = " + to_string(n);
    } else if (top.threshold < rt) {
      return "chain threshold " + to_string(top.threshold) + " lies below the largest real root/pole";
    }
  }
  if (top.order > 0) {
    // the half-line must avoid roots of the log arguments and poles of every lower derivative
    for (const auto& t : expr.terms())
      if (top.threshold < *real_threshold(t.arg)) return "chain threshold lies below a root of a log argument";
    for (int j = 0; j < top.order; ++j)
      if (top.threshold < poly_threshold(d[static_cast<std::size_t>(j)].rational().den()))
        return "chain threshold lies below a pole of the order-" + std::to_string(j) + " derivative";
  }
  if (top.threshold < expr.valid_from()) return "chain threshold lies below the domain of the expression";
  Integer prev = top.threshold;
  int prev_sign = top.sign;
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    const ChainStep& step = cert.chain[i];
    if (i > 0) {
      if (step.order != cert.chain[i - 1].order - 1) return "chain orders are not consecutive";
      if (step.threshold < prev) return "chain thresholds decrease at order " + std::to_string(step.order);
      // the step's sign must follow from the derivative's sign and the limit at infinity
      Limit L = d[static_cast<std::size_t>(step.order)].limit();
      if (!step.limit || step.limit->to_string() != L.to_string())
        return "recorded limit at order " + std::to_string(step.order) + " differs from " + L.to_string();
      bool ok;
      if (prev_sign == 0) ok = L.kind == Limit::Finite && step.sign == L.sign();
      else if (L.kind == Limit::Finite && (prev_sign < 0 ? L.sign() >= 0 : L.sign() <= 0)) ok = step.sign == -prev_sign;
      else ok = step.sign == L.sign() && L.sign() == prev_sign;
      if (!ok) return "order-" + std::to_string(step.order) + " sign does not follow from its derivative and limit";
    }
    prev = step.threshold;
    prev_sign = step.sign;
    if (step.sign == 0 && step.order == top.order) continue;
    const LogRatExpr& e = d[static_cast<std::size_t>(step.order)];
    const long t = to_long(step.threshold);
    for (long off : {0L, 1L, 2L, 3L, 5L, 10L, 50L, 100L, 1000L, 100000L}) {
      PointCheck p = sign_at_point(e, t + off, 1L << 14);
      if (p.sign != step.sign)
        return "order-" + std::to_string(step.order) + " sign at n = " + std::to_string(t + off) + " is " +
               std::to_string(p.sign) + ", recorded " + std::to_string(step.sign);
    }
  }
  if (cert.analytic_from < prev) return "conclusion precedes the chain threshold";
  if (cert.sign != cert.chain.back().sign) return "conclusion sign differs from the chain";
  if (cert.sign != 0) {
    PointCheck b = sign_at_point(expr, to_long(cert.analytic_from));
    if (b.sign != cert.sign) return "boundary check at n = " + to_string(cert.analytic_from) + " fails";
  }
  Integer expect = cert.analytic_from - 1;
  for (const auto& p : cert.extension) {
    if (Integer(p.n) != expect) return "extension checks are not consecutive";
    if (sign_at_point(expr, p.n).sign != cert.want) return "extension check at n = " + std::to_string(p.n) + " fails";
    --expect;
  }
  if (cert.from != expect + 1) return "final threshold does not match the extension checks";
  return "";
}

}  // namespace rootlog
