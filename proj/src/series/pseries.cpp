#include <numeric>

#include "rootlog/error.hpp"
#include "rootlog/series.hpp"

namespace rootlog {

namespace {

const LogCoeff& zero_coeff() {
  static const LogCoeff z{FieldElem(0), FieldElem(0)};
  return z;
}

LogCoeff product(const LogCoeff& a, const LogCoeff& b) {
  if (a.has_log() && b.has_log()) throw Error("series product produces log(n)^2, which is unsupported");
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0};
}

std::string power_text(int s, int rho, const std::string& var) {
  if (s == 0) return "";
  Rational e(s, rho);
  e.canonicalize();
  if (e == 1) return "/" + var;
  return "/" + var + "^" + (is_integer(e) ? to_string(e) : "(" + to_string(e) + ")");
}

// Sum of c_k x^k for k >= 0 with x of positive valuation, truncated at `order`.
PSeries compose_power_series(const PSeries& x, const std::vector<FieldElem>& c, int order) {
  PSeries out(x.rho(), order);
  PSeries xk = PSeries::constant(FieldElem(1), order, x.rho());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) xk = (xk * x).truncate(order);
    if (xk.valuation() > order) break;
    if (!is_zero(c[k])) out += xk * c[k];
  }
  return out.truncate(order);
}

}  // namespace

PSeries::PSeries(int rho, int order) : rho_(rho), order_(order), c_(static_cast<std::size_t>(order) + 1, zero_coeff()) {
  if (rho < 1) throw std::invalid_argument("series ramification must be positive");
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

PSeries PSeries::constant(const FieldElem& c, int order, int rho) {
  PSeries s(rho, order);
  s.set(0, c);
  return s;
}

PSeries PSeries::from_coeffs(const std::vector<FieldElem>& c, int rho) {
  if (c.empty()) throw std::invalid_argument("empty coefficient list");
  PSeries s(rho, static_cast<int>(c.size()) - 1);
  for (std::size_t k = 0; k < c.size(); ++k) s.set(static_cast<int>(k), c[k]);
  return s;
}

PSeries PSeries::binomial(const FieldElem& x, const FieldElem& e, int order, int rho) {
  PSeries s(rho, order);
  FieldElem term(1);
  for (int k = 0; k * rho <= order; ++k) {
    s.set(k * rho, term);
    term = term * (e - FieldElem(k)) * x / FieldElem(k + 1);
  }
  return s;
}

const LogCoeff& PSeries::coeff(int s) const {
  if (s < 0) return zero_coeff();
  if (s > order_) throw Error("series coefficient beyond the truncation order");
  return c_[static_cast<std::size_t>(s)];
}

void PSeries::set(int s, const FieldElem& c0, const FieldElem& c1) {
  if (s < 0 || s > order_) throw std::out_of_range("series index outside 0..order");
  c_[static_cast<std::size_t>(s)] = {c0, c1};
}

int PSeries::valuation() const {
  for (int s = 0; s <= order_; ++s)
    if (!c_[static_cast<std::size_t>(s)].is_zero()) return s;
  return order_ + 1;
}

bool PSeries::has_log() const {
  for (const auto& c : c_)
    if (c.has_log()) return true;
  return false;
}

PSeries PSeries::lift(int m) const {
  if (m == 1) return *this;
  PSeries out(rho_ * m, order_ * m);
  for (int s = 0; s <= order_; ++s) out.c_[static_cast<std::size_t>(s * m)] = c_[static_cast<std::size_t>(s)];
  return out;
}

PSeries PSeries::truncate(int order) const {
  if (order >= order_) return *this;
  PSeries out(rho_, order);
  for (int s = 0; s <= order; ++s) out.c_[static_cast<std::size_t>(s)] = c_[static_cast<std::size_t>(s)];
  return out;
}

PSeries PSeries::times_power(int s) const {
  PSeries out(rho_, order_ + s);
  for (int k = 0; k <= order_; ++k) out.c_[static_cast<std::size_t>(k + s)] = c_[static_cast<std::size_t>(k)];
  return out;
}

PSeries PSeries::shift(long k, const FieldElem& w) const {
  if (k == 0) return *this;
  FieldElem kk{Rational(k)};
  // log(1 + k/n)
  PSeries log1p(rho_, order_);
  FieldElem pk(1);
  for (int j = 1; j * rho_ <= order_; ++j) {
    pk = pk * kk;
    FieldElem t = pk / FieldElem(j);
    if (j % 2 == 0) t = -t;
    log1p.set(j * rho_, t);
  }
  PSeries out(rho_, order_);
  for (int s = 0; s <= order_; ++s) {
    const LogCoeff& c = c_[static_cast<std::size_t>(s)];
    if (c.is_zero()) continue;
    int rest = order_ - s;
    FieldElem e = w - FieldElem(Rational(s, rho_));
    PSeries B = binomial(kk, e, rest, rho_);
    PSeries term(rho_, rest);
    term.set(0, c.c0, c.c1);
    term = term * B;
    if (c.has_log()) term += (log1p.truncate(rest) * B) * c.c1;
    out += term.truncate(rest).times_power(s);
  }
  return out;
}

PSeries PSeries::operator-() const {
  PSeries out = *this;
  for (auto& c : out.c_) c = {-c.c0, -c.c1};
  return out;
}

void unify_rho(PSeries& a, PSeries& b) {
  if (a.rho() == b.rho()) return;
  int l = std::lcm(a.rho(), b.rho());
  a = a.lift(l / a.rho());
  b = b.lift(l / b.rho());
}

PSeries operator+(const PSeries& a0, const PSeries& b0) {
  PSeries a = a0, b = b0;
  unify_rho(a, b);
  PSeries out(a.rho(), std::min(a.order(), b.order()));
  for (int s = 0; s <= out.order(); ++s) {
    const auto& x = a.coeff(s);
    const auto& y = b.coeff(s);
    out.set(s, x.c0 + y.c0, x.c1 + y.c1);
  }
  return out;
}

PSeries operator-(const PSeries& a, const PSeries& b) { return a + (-b); }

PSeries operator*(const PSeries& a0, const PSeries& b0) {
  PSeries a = a0, b = b0;
  unify_rho(a, b);
  int va = a.valuation(), vb = b.valuation();
  int order = std::min(a.order() + vb, b.order() + va);
  PSeries out(a.rho(), order);
  for (int i = va; i <= a.order() && i <= order; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = vb; j <= b.order() && i + j <= order; ++j) {
      if (b.coeff(j).is_zero()) continue;
      LogCoeff p = product(a.coeff(i), b.coeff(j));
      const LogCoeff& cur = out.coeff(i + j);
      out.set(i + j, cur.c0 + p.c0, cur.c1 + p.c1);
    }
  }
  return out;
}

PSeries operator*(const PSeries& a, const FieldElem& s) {
  PSeries out = a;
  for (int k = 0; k <= a.order(); ++k) out.set(k, a.coeff(k).c0 * s, a.coeff(k).c1 * s);
  return out;
}

bool PSeries::agrees_with(const PSeries& o, int through) const {
  PSeries a = *this, b = o;
  unify_rho(a, b);
  int m = std::min({through * (a.rho() / rho_), a.order(), b.order()});
  for (int s = 0; s <= m; ++s)
    if (!(a.coeff(s) == b.coeff(s))) return false;
  return true;
}

std::string PSeries::to_string(const std::string& var) const {
  std::string out;
  for (int s = 0; s <= order_; ++s) {
    const LogCoeff& c = c_[static_cast<std::size_t>(s)];
    if (c.is_zero()) continue;
    std::string coef;
    if (!c.has_log()) coef = rootlog::to_string(c.c0);
    else if (is_zero(c.c0)) coef = "(" + rootlog::to_string(c.c1) + ")*log(" + var + ")";
    else coef = "(" + rootlog::to_string(c.c0) + " + (" + rootlog::to_string(c.c1) + ")*log(" + var + "))";
    if (!out.empty()) out += " + ";
    out += (s > 0 && coef.find_first_of("+-/ ") != std::string::npos && coef.front() != '(') ? "(" + coef + ")" : coef;
    out += power_text(s, rho_, var);
  }
  if (out.empty()) out = "0";
  Rational e(order_, rho_);
  e.canonicalize();
  return out + " + O(" + var + "^-(" + rootlog::to_string(e) + "+))";
}

PSeries recip(const PSeries& a) {
  const LogCoeff& a0 = a.coeff(0);
  if (is_zero(a0.c0) || a0.has_log()) throw Error("series reciprocal needs a nonzero plain constant term");
  FieldElem inv = a0.c0.inverse();
  PSeries x = a * inv - PSeries::constant(FieldElem(1), a.order(), a.rho());
  std::vector<FieldElem> c;
  for (int k = 0; k <= a.order(); ++k) c.push_back(k % 2 == 0 ? FieldElem(1) : FieldElem(-1));
  return compose_power_series(x, c, a.order()) * inv;
}

PSeries log(const PSeries& a) {
  const LogCoeff& a0 = a.coeff(0);
  if (!(a0.c0 == FieldElem(1)) || a0.has_log()) throw Error("series logarithm needs constant term exactly 1");
  PSeries x = a - PSeries::constant(FieldElem(1), a.order(), a.rho());
  std::vector<FieldElem> c{FieldElem(0)};
  for (int k = 1; k <= a.order(); ++k) c.push_back(FieldElem(Rational(k % 2 == 1 ? 1 : -1, k)));
  return compose_power_series(x, c, a.order());
}

PSeries exp(const PSeries& a) {
  if (!a.coeff(0).is_zero()) throw Error("series exponential needs a zero constant term");
  std::vector<FieldElem> c;
  Rational f = 1;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) f /= k;
    c.push_back(FieldElem(f));
  }
  return compose_power_series(a, c, a.order());
}

}  // namespace rootlog
