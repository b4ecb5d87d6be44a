#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "rootlog/rational.hpp"

namespace rootlog {

/// Closed interval [lo, hi] with MPFR endpoints rounded outward. Every
/// operation returns an enclosure of the exact result set, so a decided sign
/// is a proof.
class Interval {
 public:
  explicit Interval(long prec = 128);
  Interval(const Rational& q, long prec);
  Interval(const Rational& lo, const Rational& hi, long prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_integer(const Integer& z, long prec);

  long precision() const { return prec_; }
  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }

  /// +1 / -1 when the interval excludes zero, 0 when it is exactly {0},
  /// nullopt when it straddles zero.
  std::optional<int> sign() const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains(const Rational& q) const;

  double mid() const;
  std::string to_string(int digits = 20) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;
  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }

  friend Interval log(const Interval& a);
  friend Interval exp(const Interval& a);
  friend Interval pow_int(const Interval& a, long e);
  /// Enclosure of the convex hull of a and b.
  friend Interval hull(const Interval& a, const Interval& b);

 private:
  long prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace rootlog
