#pragma once

// Independent reference computations for the tests: straight floating-point
// logarithms of exact terms, with no shared code path with the library's
// exact or interval comparisons.

#include <mpfr.h>

#include <cstdlib>
#include <vector>

#include "rootlog/rational.hpp"

namespace oracle {

class Real {
 public:
  explicit Real(long prec = 2048) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

/// log(q)/n for q > 0.
inline Real log_root(const rootlog::Rational& q, long n, long prec = 2048) {
  Real num(prec), den(prec);
  mpfr_set_z(num.get(), q.get_num_mpz_t(), MPFR_RNDN);
  mpfr_set_z(den.get(), q.get_den_mpz_t(), MPFR_RNDN);
  mpfr_log(num.get(), num.get(), MPFR_RNDN);
  mpfr_log(den.get(), den.get(), MPFR_RNDN);
  mpfr_sub(num.get(), num.get(), den.get(), MPFR_RNDN);
  mpfr_div_si(num.get(), num.get(), n, MPFR_RNDN);
  return num;
}

/// Sign of sum w_k * L(m + k), or 0 when |sum| is below 2^-1500 (treated as equality).
inline int weighted_sign(const std::vector<Real>& L, const std::vector<long>& w, long prec = 2048) {
  Real s(prec), t(prec);
  for (std::size_t k = 0; k < w.size(); ++k) {
    mpfr_mul_si(t.get(), L[k].get(), w[k], MPFR_RNDN);
    mpfr_add(s.get(), s.get(), t.get(), MPFR_RNDN);
  }
  if (mpfr_zero_p(s.get()) || mpfr_get_exp(s.get()) < -1500) return 0;
  return mpfr_sgn(s.get());
}

/// terms[i] = b_{first + i}; returns window starts m in [lo, hi] where the
/// root sequence violates log-concavity (ratio log-convexity when third = true):
/// L_m - 2L_{m+1} + L_{m+2} <= 0, resp. L_m - 3L_{m+1} + 3L_{m+2} - L_{m+3} <= 0,
/// with L_n = log(b_n)/n.
inline std::vector<long> root_failures(const std::vector<rootlog::Rational>& terms, long first, long lo, long hi,
                                       bool third) {
  std::vector<long> out;
  const std::vector<long> w = third ? std::vector<long>{1, -3, 3, -1} : std::vector<long>{1, -2, 1};
  for (long m = lo; m <= hi; ++m) {
    std::vector<Real> L;
    for (long k = 0; k < static_cast<long>(w.size()); ++k)
      L.push_back(log_root(terms[static_cast<std::size_t>(m + k - first)], m + k));
    if (weighted_sign(L, w) > 0) out.push_back(m);
  }
  return out;
}

}  // namespace oracle
