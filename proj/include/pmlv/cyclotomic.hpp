#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pmlv/partition.hpp"
#include "pmlv/rational.hpp"
#include "pmlv/real.hpp"

namespace pmlv {

// Coefficients c_0..c_d (c_d = 1) of the M-th cyclotomic polynomial. Computed
// by dividing x^M - 1 by Phi_d for every proper divisor d, and cached.
const std::vector<BigInt>& cyclotomic_polynomial(long order);

long euler_phi(long order);

// Element of Q(w_M), w_M = exp(2 pi i / M), stored in the power basis
// 1, w, ..., w^{phi(M)-1} of Q[x]/(Phi_M). Values that turn out rational are
// demoted to order 1 so equality is structural. Mixed-order operations lift
// both operands to Q(w_L), L = lcm of the orders.
class CyclotomicNumber {
public:
    CyclotomicNumber() : coeffs_{Rational()} {}
    CyclotomicNumber(const Rational& q) : coeffs_{q} {}
    CyclotomicNumber(long value) : coeffs_{Rational(value)} {}
    // Reduces an arbitrary-length polynomial in w_M.
    CyclotomicNumber(long order, std::vector<Rational> poly);

    // w_M^e, exponent taken mod M.
    static CyclotomicNumber root_of_unity(long order, long e);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_rational() const { return order_ == 1; }
    bool is_zero() const { return order_ == 1 && coeffs_[0].is_zero(); }
    bool is_one() const { return order_ == 1 && coeffs_[0].is_one(); }
    // Throws ConsistencyError unless the value is rational.
    const Rational& to_rational() const;

    // Same value expressed over Q(w_target); order() must divide target.
    CyclotomicNumber lifted(long target) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const Rational& rhs);
    CyclotomicNumber operator-() const;

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    std::string str() const;

private:
    void normalize();

    long order_ = 1;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

// sum_j coeffs[j] exp(2 pi i j / M) at the requested decimal precision (>= 10).
Complex complex_eval(const CyclotomicNumber& z, int digits);

// sum_{j=0}^{n-1} w_n^{jm}: n if n | m, else 0.
Rational power_sum_roots(long n, long m);

// m_lambda(1, w_n, ..., w_n^{n-1}) summed exactly over the distinct
// arrangements of lambda padded to n slots. Equals <p_n o h_k, m_lambda> and is
// always a rational integer; zero when length(lambda) > n.
Rational monomial_at_roots(const Partition& lambda, int n, const PartitionGuards& guards = {});

} // namespace pmlv
