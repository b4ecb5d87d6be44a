#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rootlog {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3/4" or "+12". Floats are rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integer(const Rational& q);
long to_long(const Integer& z);

inline int sign_of(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);
Rational abs_of(const Rational& q);

}  // namespace rootlog
