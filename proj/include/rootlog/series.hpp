#pragma once

#include <string>
#include <vector>

#include "rootlog/number_field.hpp"

namespace rootlog {

/// Coefficient c0 + c1*log(n).
struct LogCoeff {
  FieldElem c0;
  FieldElem c1;

  bool is_zero() const { return rootlog::is_zero(c0) && rootlog::is_zero(c1); }
  bool has_log() const { return !rootlog::is_zero(c1); }
  friend bool operator==(const LogCoeff& a, const LogCoeff& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
};

/// Truncated series sum_{s=0}^{K} coeff_s * n^{-s/rho}; everything past
/// n^{-K/rho} is unknown. log n occurs at most to the first power.
class PSeries {
 public:
  explicit PSeries(int rho = 1, int order = 0);
  static PSeries constant(const FieldElem& c, int order, int rho = 1);
  /// Series with the given plain coefficients c[s] (s = 0..size-1), order size-1.
  static PSeries from_coeffs(const std::vector<FieldElem>& c, int rho = 1);
  /// log(1 + k/n) style helper: (1 + x/n)^e as a series of order K.
  static PSeries binomial(const FieldElem& x, const FieldElem& e, int order, int rho = 1);

  int rho() const { return rho_; }
  int order() const { return order_; }
  const LogCoeff& coeff(int s) const;
  FieldElem plain(int s) const { return coeff(s).c0; }
  void set(int s, const FieldElem& c0, const FieldElem& c1 = FieldElem(0));
  /// Smallest s with a nonzero coefficient, or order()+1 when all known terms vanish.
  int valuation() const;
  bool has_log() const;

  /// Same series re-expressed with rho' = m*rho.
  PSeries lift(int m) const;
  PSeries truncate(int order) const;
  /// Multiplication by n^{-s/rho}.
  PSeries times_power(int s) const;
  /// (1 + k/n)^w * a(n + k), re-expanded in n; log n becomes log(n+k).
  PSeries shift(long k, const FieldElem& w) const;

  PSeries operator-() const;
  friend PSeries operator+(const PSeries& a, const PSeries& b);
  friend PSeries operator-(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const PSeries& a, const FieldElem& s);
  PSeries& operator+=(const PSeries& b) { return *this = *this + b; }
  PSeries& operator-=(const PSeries& b) { return *this = *this - b; }
  PSeries& operator*=(const PSeries& b) { return *this = *this * b; }

  /// Equality of all coefficients through min of both orders.
  bool agrees_with(const PSeries& o, int through) const;

  std::string to_string(const std::string& var = "n") const;

 private:
  int rho_;
  int order_;
  std::vector<LogCoeff> c_;
};

PSeries recip(const PSeries& a);
/// log a, for a with constant term exactly 1 and no log part there.
PSeries log(const PSeries& a);
/// exp a, for a with zero constant term.
PSeries exp(const PSeries& a);

/// Brings a and b to a common rho (lcm).
void unify_rho(PSeries& a, PSeries& b);

}  // namespace rootlog
