#pragma once

#include "pmlv/rational.hpp"
#include "pmlv/real.hpp"

namespace pmlv::constants {

// All functions return values good to the requested binary precision. Values
// of pi, log 2, Euler's gamma and zeta(m) are memoised per (constant, bits) in
// a process-wide cache guarded by a mutex.

Real pi(mpfr_prec_t bits);
Real pi_squared(mpfr_prec_t bits);
// log 2 = sum_{k>=1} 1/(k 2^k)
Real log2(mpfr_prec_t bits);
Real euler_gamma(mpfr_prec_t bits);
// zeta(m), m >= 2, from Borwein's accelerated alternating series for eta(m).
Real zeta(int m, mpfr_prec_t bits);

// Hurwitz zeta(s, a) = sum_{k>=0} (k + a)^{-s}, integer s >= 2, real a > 0,
// by Euler-Maclaurin summation.
Real hurwitz_zeta(int s, const Real& a);
// psi(a), a > 0, by upward shift and the asymptotic expansion.
Real digamma(const Real& a);

} // namespace pmlv::constants
