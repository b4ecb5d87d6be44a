#pragma once

#include <utility>
#include <vector>

#include "rootlog/polynomial.hpp"

namespace rootlog {

/// Factorization over Q into primitive integer factors with positive leading
/// coefficient, paired with multiplicities. Rational roots are found exactly;
/// higher-degree splitting uses Kronecker's method with a search cap, past
/// which a factor is reported as irreducible.
std::vector<std::pair<Poly, int>> factor_rational(const Poly& p);

/// Irreducible factors of a square-free polynomial.
std::vector<Poly> factor_squarefree(const Poly& p);

}  // namespace rootlog
