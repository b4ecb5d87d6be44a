#pragma once

#include <string>

#include "rootlog/number_field.hpp"
#include "rootlog/polynomial.hpp"

namespace rootlog {

/// num/den in lowest terms with a monic denominator, so equal functions are
/// structurally equal.
template <class T>
class RationalFunction {
 public:
  using P = Polynomial<T>;

  RationalFunction() : den_(P::constant(T(1))) {}
  RationalFunction(const P& num) : num_(num), den_(P::constant(T(1))) {}
  RationalFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
  static RationalFunction constant(const T& c) { return RationalFunction(P::constant(c)); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  template <class U>
  U eval(const U& x) const {
    return num_.template eval<U>(x) / den_.template eval<U>(x);
  }
  T operator()(const T& x) const { return eval<T>(x); }

  /// A pole of order m becomes one of order m + 1, so with u = rad(den) the
  /// result (num' u - num den'/g) / (den u), g = gcd(den, den'), is already reduced.
  RationalFunction derivative() const {
    if (den_.degree() == 0) return RationalFunction(num_.derivative(), den_, true);  // den_ is 1
    const P dd = den_.derivative();
    const P g = gcd(den_, dd);
    const P u = exact_div(den_, g);
    P num = num_.derivative() * u - num_ * exact_div(dd, g);
    if (num.is_zero()) return RationalFunction();
    return RationalFunction(std::move(num), den_ * u, true);
  }
  /// f(n + k).
  RationalFunction shift(const T& k) const { return RationalFunction(num_.shift(k), den_.shift(k)); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, true); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // only common factors of the two denominators can cancel
    P g = a.den_ == b.den_ ? a.den_ : gcd(a.den_, b.den_);
    P bd = exact_div(b.den_, g);
    P num = a.num_ * bd + b.num_ * exact_div(a.den_, g);
    P den = a.den_ * bd;
    if (num.is_zero()) return RationalFunction();
    for (P h = gcd(g, num); h.degree() > 0; h = gcd(gcd(h, num), den)) {
      num = exact_div(num, h);
      den = exact_div(den, h);
    }
    return RationalFunction(std::move(num), std::move(den), true);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string(const std::string& var = "n") const {
    std::string n = num_.to_string(var);
    if (den_.degree() == 0) return n;
    return "(" + n + ")/(" + den_.to_string(var) + ")";
  }

 private:
  RationalFunction(P num, P den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = P::constant(T(1));
      return;
    }
    if (den_.degree() > 0) {
      P g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    T inv = T(1) / den_.lc();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
  P num_;
  P den_;
};

using RatFunc = RationalFunction<Rational>;
using FRatFunc = RationalFunction<FieldElem>;

FRatFunc to_field_ratfunc(const RatFunc& f);

}  // namespace rootlog
