#pragma once

#include <optional>
#include <vector>

#include "rootlog/polynomial.hpp"

namespace rootlog {

/// One distinct real root. When lo == hi the root is exactly that rational;
/// otherwise it lies in the open interval (lo, hi), and the square-free part of
/// the polynomial takes opposite nonzero signs at the two endpoints.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  bool exact() const { return lo == hi; }
};

struct RootIsolation {
  std::vector<RootInterval> roots;  // sorted, pairwise disjoint
  Poly squarefree;                  // primitive square-free part used for refinement
};

/// Descartes-rule bisection over exact integer arithmetic.
RootIsolation isolate_real_roots(const Poly& p);

/// Shrinks the interval to width <= width (exact roots are left untouched).
void refine_root(const Poly& squarefree, RootInterval& root, const Rational& width);

/// Integer B with every real root < B and B <= floor(max root) + 1.
/// nullopt when p has no real roots.
std::optional<Integer> max_real_root_bound(const Poly& p);

/// Sturm sequence of p (p, p', -rem, ...).
std::vector<Poly> sturm_sequence(const Poly& p);
/// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const std::vector<Poly>& seq, const Rational& a, const Rational& b);
/// Number of distinct real roots over the whole line.
int sturm_count_all(const std::vector<Poly>& seq);

/// The rational with smallest denominator in the closed interval [lo, hi].
Rational simplest_rational_between(Rational lo, Rational hi);

/// Cauchy-type bound: every root has absolute value < the returned power of two.
Integer root_magnitude_bound(const Poly& p);

}  // namespace rootlog
