#include "rootlog/lograt.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rootlog/error.hpp"
#include "rootlog/series.hpp"
#include "rootlog/sign.hpp"

namespace rootlog {

// ---------------------------------------------------------------- LogConst

LogConst LogConst::log_of(const FieldElem& gamma) {
  LogConst c;
  c.add_log(Rational(1), gamma);
  return c;
}

void LogConst::add_log(const Rational& r, const FieldElem& gamma) {
  if (sgn(r) == 0) return;
  int s = gamma.sign();
  if (s <= 0) throw Error("logarithm of a non-positive constant " + rootlog::to_string(gamma));
  if (gamma == FieldElem(1)) return;
  Rational rr = r;
  FieldElem g = gamma;
  if (compare(g, FieldElem(1)) < 0) {
    g = g.inverse();
    rr = -rr;
  }
  for (auto it = logs_.begin(); it != logs_.end(); ++it) {
    if (it->second == g) {
      it->first += rr;
      if (sgn(it->first) == 0) logs_.erase(it);
      return;
    }
  }
  logs_.emplace_back(rr, g);
}

LogConst LogConst::operator-() const {
  LogConst c(-q_);
  for (const auto& [r, g] : logs_) c.logs_.emplace_back(-r, g);
  return c;
}

LogConst operator+(const LogConst& a, const LogConst& b) {
  LogConst c = a;
  c.q_ += b.q_;
  for (const auto& [r, g] : b.logs_) c.add_log(r, g);
  return c;
}

LogConst operator*(const Rational& s, const LogConst& a) {
  if (sgn(s) == 0) return LogConst();
  LogConst c(a.q_ * FieldElem(s));
  for (const auto& [r, g] : a.logs_) c.logs_.emplace_back(r * s, g);
  return c;
}

bool LogConst::is_zero() const {
  if (logs_.empty()) return rootlog::is_zero(q_);
  Integer den = 1;
  for (const auto& [r, g] : logs_) den = lcm(den, Integer(r.get_den()));
  FieldElem prod(1);
  for (const auto& [r, g] : logs_) prod *= g.pow(to_long(Integer(r * den)));
  if (!(prod == FieldElem(1))) return false;
  return rootlog::is_zero(q_);
}

int LogConst::sign() const {
  if (logs_.empty()) return q_.sign();
  if (is_zero()) return 0;
  for (long prec = 64; prec <= (1L << 20); prec *= 2) {
    auto s = enclose(prec).sign();
    if (s && *s != 0) return *s;
  }
  throw Error("sign of a log constant undecided at the precision cap");
}

Interval LogConst::enclose(long prec) const {
  Interval v = q_.enclose(prec);
  for (const auto& [r, g] : logs_) v += Interval(r, prec) * log(g.enclose(prec));
  return v;
}

std::string LogConst::to_string() const {
  std::string out;
  if (!rootlog::is_zero(q_) || logs_.empty()) out = rootlog::to_string(q_);
  for (const auto& [r, g] : logs_) {
    if (!out.empty()) out += " + ";
    out += "(" + rootlog::to_string(r) + ")*log(" + rootlog::to_string(g) + ")";
  }
  return out;
}

std::string Limit::to_string() const {
  if (kind == PlusInfinity) return "+inf";
  if (kind == MinusInfinity) return "-inf";
  return value.to_string();
}

// -------------------------------------------------------------- LogRatExpr

namespace {

FPoly to_fpoly(const Poly& p) { return to_field_poly(p); }

// f(n) = sum_i c_i n^{deg-i} / lc as a series in 1/n: 1 + (c_{deg-1}/lc)/n + ...
PSeries unit_series(const FPoly& p, int order) {
  PSeries s(1, order);
  const int d = p.degree();
  FieldElem inv = p.lc().inverse();
  for (int i = 0; i <= order && i <= d; ++i) s.set(i, p.coeff(d - i) * inv);
  return s;
}

}  // namespace

void LogRatExpr::add_term(const Poly& mult, const FRatFunc& arg, const Integer& valid_from) {
  if (mult.is_zero()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->arg == arg) {
      it->mult += mult;
      if (it->mult.is_zero()) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({mult, arg, valid_from});
}

void LogRatExpr::add_log(const Poly& mult, const FRatFunc& arg) {
  if (mult.is_zero()) return;
  if (arg.is_zero()) throw Error("logarithm of the zero function");
  for (const auto& t : terms_) {
    if (t.arg == arg) {
      add_term(mult, arg, t.valid_from);
      return;
    }
  }
  EventualSign s = sign_eventual(arg, Integer(1));
  if (s.sign <= 0) throw Error("log argument is not eventually positive: " + arg.to_string());
  add_term(mult, arg, s.from);
}

int LogRatExpr::max_multiplier_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mult.degree());
  return d;
}

Integer LogRatExpr::valid_from() const {
  Integer n = 1;
  for (const auto& t : terms_) n = std::max(n, t.valid_from);
  if (rational_.den().degree() > 0) n = std::max(n, poly_threshold(rational_.den()));
  return n;
}

LogRatExpr LogRatExpr::derivative() const {
  LogRatExpr out(rational_.derivative());
  for (const auto& t : terms_) {
    out.add_term(t.mult.derivative(), t.arg, t.valid_from);
    FRatFunc m(to_fpoly(t.mult));
    out.rational_ += m * (t.arg.derivative() / t.arg);
  }
  return out;
}

LogRatExpr LogRatExpr::derivative(int order) const {
  LogRatExpr e = *this;
  for (int k = 0; k < order; ++k) e = e.derivative();
  return e;
}

LogRatExpr LogRatExpr::shift(long k) const {
  FieldElem fk{Rational(k)};
  LogRatExpr out(rational_.shift(fk));
  for (const auto& t : terms_) out.add_term(t.mult.shift(Rational(k)), t.arg.shift(fk), t.valid_from - k);
  return out;
}

LogRatExpr LogRatExpr::operator-() const { return Rational(-1) * *this; }

LogRatExpr operator+(const LogRatExpr& a, const LogRatExpr& b) {
  LogRatExpr out = a;
  out.rational_ += b.rational_;
  for (const auto& t : b.terms_) out.add_term(t.mult, t.arg, t.valid_from);
  return out;
}

LogRatExpr operator*(const Rational& s, const LogRatExpr& a) {
  if (sgn(s) == 0) return LogRatExpr();
  LogRatExpr out(a.rational_ * FRatFunc::constant(FieldElem(s)));
  for (const auto& t : a.terms_) out.terms_.push_back({t.mult * s, t.arg, t.valid_from});
  return out;
}

Interval LogRatExpr::eval(const Rational& n, long prec) const {
  FieldElem x(n);
  Interval v(prec);
  if (!rational_.is_zero()) v = rational_.eval<FieldElem>(x).enclose(prec);
  else v = Interval(Rational(0), prec);
  for (const auto& t : terms_) {
    FieldElem a = t.arg.eval<FieldElem>(x);
    if (a.sign() <= 0) throw Error("log argument non-positive at n = " + rootlog::to_string(n));
    v += Interval(t.mult.eval<Rational>(n), prec) * log(a.enclose(prec));
  }
  return v;
}

Limit LogRatExpr::limit() const {
  // Coefficients of n^j (plain) and n^j*log(n) for j >= 0; negative powers vanish.
  std::map<int, LogConst> plain;
  std::map<int, Rational> with_log;
  for (const auto& t : terms_) {
    const int dm = t.mult.degree();
    const FPoly& N = t.arg.num();
    const FPoly& D = t.arg.den();
    FieldElem gamma = N.lc() / D.lc();
    Rational e(N.degree() - D.degree());
    PSeries L = log(unit_series(N, dm)) - log(unit_series(D, dm));
    for (int i = 0; i <= dm; ++i) {
      Rational mi = t.mult.coeff(i);
      if (sgn(mi) == 0) continue;
      LogConst lg;
      lg.add_log(mi, gamma);
      plain[i] += lg;
      with_log[i] += mi * e;
      for (int j = 0; j < i; ++j) plain[j] += LogConst(L.plain(i - j) * FieldElem(mi));
    }
  }
  if (!rational_.is_zero()) {
    FPoly q = divrem(rational_.num(), rational_.den()).first;
    for (int j = 0; j <= q.degree(); ++j) plain[j] += LogConst(q.coeff(j));
  }
  int top = 0;
  for (const auto& [j, c] : plain) top = std::max(top, j);
  for (const auto& [j, c] : with_log) top = std::max(top, j);
  for (int j = top; j >= 0; --j) {
    auto wl = with_log.find(j);
    if (wl != with_log.end() && sgn(wl->second) != 0)
      return {sgn(wl->second) > 0 ? Limit::PlusInfinity : Limit::MinusInfinity, LogConst()};
    auto pl = plain.find(j);
    if (pl == plain.end()) continue;
    if (j == 0) return {Limit::Finite, pl->second};
    int s = pl->second.sign();
    if (s != 0) return {s > 0 ? Limit::PlusInfinity : Limit::MinusInfinity, LogConst()};
  }
  return {Limit::Finite, LogConst()};
}

std::string LogRatExpr::to_string(const std::string& var) const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.mult.to_string(var) + ")*log(" + t.arg.to_string(var) + ")";
  }
  if (!rational_.is_zero() || out.empty()) {
    if (!out.empty()) out += " + ";
    out += rational_.to_string(var);
  }
  return out;
}

}  // namespace rootlog
