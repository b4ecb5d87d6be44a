#pragma once

#include <string>
#include <utility>

#include "rootlog/interval.hpp"
#include "rootlog/number_field.hpp"
#include "rootlog/polynomial.hpp"

namespace rootlog {

/// Real algebraic number: irreducible primitive integer minimal polynomial
/// plus an isolating interval. Rationals carry a linear minpoly and lo == hi.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  RealAlgebraic(const Rational& q);
  RealAlgebraic(long q) : RealAlgebraic(Rational(q)) {}

  /// The unique root of p in the open interval (lo, hi); p may be reducible.
  static RealAlgebraic root_of(const Poly& p, const Rational& lo, const Rational& hi);
  /// Positive square root of a non-negative rational.
  static RealAlgebraic sqrt(const Rational& a);
  static RealAlgebraic from_field(const FieldElem& x);

  const Poly& minpoly() const { return minpoly_; }
  bool is_rational() const { return minpoly_.degree() == 1; }
  Rational to_rational() const;
  /// Isolating interval of width <= width (a copy; the value is immutable).
  std::pair<Rational, Rational> interval(const Rational& width) const;
  std::pair<Rational, Rational> interval() const { return {lo_, hi_}; }

  int sign() const;
  Interval enclose(long prec) const;
  FieldElem to_field() const;

  RealAlgebraic operator-() const;
  RealAlgebraic inverse() const;
  friend RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b) { return a + (-b); }
  friend RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b) { return a * b.inverse(); }
  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);
  friend bool operator!=(const RealAlgebraic& a, const RealAlgebraic& b) { return !(a == b); }
  friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) < 0; }
  friend int compare(const RealAlgebraic& a, const RealAlgebraic& b);

  std::string to_string() const;

 private:
  RealAlgebraic(Poly minpoly, Rational lo, Rational hi) : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}
  Poly minpoly_;
  Rational lo_, hi_;
};

inline int alg_sign(const RealAlgebraic& x) { return x.sign(); }
inline std::string to_string(const RealAlgebraic& x) { return x.to_string(); }

}  // namespace rootlog
