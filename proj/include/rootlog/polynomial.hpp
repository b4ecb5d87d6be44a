#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rootlog/rational.hpp"

namespace rootlog {

/// Dense univariate polynomial over an exact field T (Rational or FieldElem).
/// coeffs()[k] is the coefficient of x^k; trailing zeros are never stored, so
/// the zero polynomial has an empty coefficient list and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
  static Polynomial monomial(const T& value, int k) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    c[static_cast<std::size_t>(k)] = value;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const {
    if (k < 0 || k > degree()) return T(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const T& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  /// p(x + shift) by repeated synthetic division (Taylor shift).
  Polynomial shift(const T& by) const {
    std::vector<T> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] = a[j - 1] + by * a[j];
    return Polynomial(std::move(a));
  }

  /// p(q(x)).
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  Polynomial monic() const {
    if (c_.empty()) return {};
    T inv = T(1) / lc();
    return *this * inv;
  }

  Polynomial operator-() const {
    std::vector<T> c(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] + b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (zero_coeff(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const T& s) {
    std::vector<T> c(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k] * s;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(T(1)), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  std::string to_string(const std::string& var = "n") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const T& a = c_[static_cast<std::size_t>(k)];
      if (zero_coeff(a)) continue;
      std::string s = coeff_to_string(a);
      bool neg = !s.empty() && s.front() == '-' && s.find_first_of("+-", 1) == std::string::npos;
      if (neg) s.erase(s.begin());
      bool compound = s.find_first_of("+-", 0) != std::string::npos;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      if (k == 0) out += s;
      else if (s == "1") out += mono;
      else out += (compound ? "(" + s + ")" : s) + "*" + mono;
    }
    return out;
  }

 private:
  static bool zero_coeff(const T& a) {
    using rootlog::is_zero;
    return is_zero(a);
  }
  static std::string coeff_to_string(const T& a) {
    using rootlog::to_string;
    return to_string(a);
  }
  void trim() {
    while (!c_.empty() && zero_coeff(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Quotient and remainder; throws on division by the zero polynomial.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divrem(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>(), a};
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  T inv = T(1) / b.lc();
  for (int k = a.degree(); k >= db; --k) {
    T f = r[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] =
          r[static_cast<std::size_t>(k - db + j)] - f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

/// Monic gcd (zero when both inputs are zero).
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

/// Exact quotient; throws if b does not divide a.
template <class T>
Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

using Poly = Polynomial<Rational>;

/// Primitive integer multiple of p with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const Poly& p);
Poly from_integer_coeffs(const std::vector<Integer>& c);
Poly primitive_part(const Poly& p);
Poly square_free_part(const Poly& p);

/// Yun decomposition: p = lc * prod factors[i]^(i+1), factors pairwise coprime
/// and square-free (some possibly constant 1).
std::vector<Poly> square_free_decomposition(const Poly& p);

Poly parse_poly_coeffs(const std::vector<std::string>& constant_first);

}  // namespace rootlog
