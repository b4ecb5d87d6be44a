#pragma once

#include <functional>
#include <vector>

#include "rootlog/polynomial.hpp"

namespace rootlog {

/// Res(a, b) over the rationals (zero if either input is zero).
Rational resultant(const Poly& a, const Poly& b);

/// Newton interpolation through (xs[i], ys[i]); xs distinct.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Builds the univariate polynomial R(x) of degree <= max_degree from its
/// values: R(x_i) = value_at(x_i) for x_i = 0, 1, ..., max_degree.
Poly interpolate_from(int max_degree, const std::function<Rational(const Rational&)>& value_at);

/// Polynomial whose roots are all sums alpha + beta (alpha root of p, beta of q).
Poly sum_resultant(const Poly& p, const Poly& q);
/// Polynomial whose roots are all products alpha * beta.
Poly product_resultant(const Poly& p, const Poly& q);

}  // namespace rootlog
