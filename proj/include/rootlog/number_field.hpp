#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "rootlog/interval.hpp"
#include "rootlog/polynomial.hpp"
#include "rootlog/roots.hpp"

namespace rootlog {

/// Q(theta) for a real root theta of an irreducible polynomial, pinned down
/// by an isolating interval. Refinement of the interval is cached behind a
/// mutex; the represented number never changes.
class NumberField {
 public:
  NumberField(Poly minpoly, Rational lo, Rational hi);

  const Poly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  /// Isolating interval of width <= width.
  std::pair<Rational, Rational> interval(const Rational& width) const;
  std::pair<Rational, Rational> interval() const;
  Interval theta(long prec) const;
  bool same_as(const NumberField& other) const;
  /// Human-readable name of theta, e.g. "3 + 2*sqrt(2)" or "root of ... in (a, b)".
  std::string describe() const;

 private:
  Poly minpoly_;
  mutable std::mutex mu_;
  mutable RootInterval iv_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field, stored as a polynomial in theta of degree below
/// the field degree. A null field means the element is an ordinary rational.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(int v) : v_(Poly::constant(Rational(v))) {}
  FieldElem(long v) : v_(Poly::constant(Rational(v))) {}
  FieldElem(const Rational& q) : v_(Poly::constant(q)) {}
  FieldElem(const Integer& z) : v_(Poly::constant(Rational(z))) {}
  FieldElem(FieldPtr field, const Poly& v);

  static FieldElem theta(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const Poly& repr() const { return v_; }
  bool is_rational() const { return v_.degree() <= 0; }
  Rational to_rational() const;

  int sign() const;
  Interval enclose(long prec) const;
  /// Rational interval containing the value, of width at most `width`.
  std::pair<Rational, Rational> bracket(const Rational& width) const;
  FieldElem inverse() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  FieldElem& operator/=(const FieldElem& b) { return *this = *this / b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  FieldElem pow(long e) const;

 private:
  static FieldPtr join(const FieldElem& a, const FieldElem& b);
  FieldPtr field_;
  Poly v_;
};

bool is_zero(const FieldElem& x);
int sign_of(const FieldElem& x);
std::string to_string(const FieldElem& x);
int compare(const FieldElem& a, const FieldElem& b);

/// Field generated by the real root of `p` isolated in (lo, hi); the
/// irreducible factor owning that root becomes the minimal polynomial.
/// Returns nullptr with `rational_root` set when the root is rational.
FieldPtr make_field(const Poly& p, const Rational& lo, const Rational& hi, Rational* rational_root);

using FPoly = Polynomial<FieldElem>;

FPoly to_field_poly(const Poly& p);
/// Evaluates every coefficient; throws if any is irrational.
Poly to_rational_poly(const FPoly& p);
bool is_rational_poly(const FPoly& p);
/// Field shared by the coefficients of p (nullptr if all rational).
FieldPtr field_of(const FPoly& p);

/// Product of the conjugates of p over Q: a rational polynomial whose real
/// roots include every real root of p.
Poly norm_poly(const FPoly& p);

/// Rational interval arithmetic helper: encloses q(x) for x in [lo, hi].
std::pair<Rational, Rational> eval_rational_interval(const Poly& q, const Rational& lo, const Rational& hi);

}  // namespace rootlog
