#pragma once

#include <optional>

#include "rootlog/rational_function.hpp"

namespace rootlog {

struct EventualSign {
  int sign = 0;   // +1, -1, or 0 for the zero function
  Integer from;   // sign(f(n)) == sign for every integer n >= from
};

/// Eventual sign of f over the integers. The threshold comes from root
/// isolation of numerator and denominator (over Q, via the norm for number
/// field coefficients) and is then lowered by exact evaluation while the sign
/// persists, stopping at `floor` or at the first pole/root/sign change.
EventualSign sign_eventual(const FRatFunc& f, const Integer& floor = 1);
EventualSign sign_eventual(const RatFunc& f, const Integer& floor = 1);

/// Integer T such that f has neither roots nor poles on the real half-line
/// [T, inf); nullopt for the zero function.
std::optional<Integer> real_threshold(const FRatFunc& f);

/// Integer T with p != 0 on [T, inf) (p nonzero).
Integer poly_threshold(const FPoly& p);

/// Exact sign of f(n) at a rational point (throws at a pole).
int sign_at(const FRatFunc& f, const Rational& n);

}  // namespace rootlog
