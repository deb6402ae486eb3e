#include "pmlv/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "pmlv/errors.hpp"

namespace pmlv::constants {

namespace {

enum class Key { Pi, Log2, Gamma, Zeta };

std::mutex cache_mutex;
std::map<std::tuple<Key, int, mpfr_prec_t>, Real> cache;

template <class Compute>
Real memo(Key key, int index, mpfr_prec_t bits, Compute&& compute)
{
    const auto k = std::make_tuple(key, index, bits);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(k); it != cache.end()) {
            return it->second;
        }
    }
    Real value = compute();
    std::lock_guard lock(cache_mutex);
    return cache.try_emplace(k, std::move(value)).first->second;
}

Real log2_series(mpfr_prec_t bits)
{
    Real sum(Bits{bits});
    Real two_pow(Bits{bits}); // 2^k
    mpfr_set_ui(two_pow.get(), 1, MPFR_RNDN);
    const long terms = static_cast<long>(bits) + 16;
    for (long k = 1; k <= terms; ++k) {
        two_pow *= 2L;
        Real term(Bits{bits});
        mpfr_ui_div(term.get(), 1, two_pow.get(), MPFR_RNDN);
        term /= k;
        sum += term;
    }
    return sum;
}

// Borwein's algorithm 2 for eta(s) = (1 - 2^{1-s}) zeta(s).
Real zeta_borwein(int s, mpfr_prec_t bits)
{
    const mpfr_prec_t work = bits + 32;
    const long n = static_cast<long>(std::ceil(static_cast<double>(work) * 0.3933)) + 8;

    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), term ratio
    // t_{i+1}/t_i = 2 (n+i)(n-i) / ((2i+1)(i+1)), t_0 = 1
    std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
    Rational term(1);
    Rational acc(0);
    for (long i = 0; i <= n; ++i) {
        acc += term;
        d[static_cast<std::size_t>(i)] = acc;
        term *= Rational(BigInt(2) * (n + i) * (n - i), BigInt(2 * i + 1) * (i + 1));
    }
    const Rational& dn = d[static_cast<std::size_t>(n)];

    Real sum(Bits{work});
    for (long k = 0; k < n; ++k) {
        Real base(Bits{work});
        mpfr_set_si(base.get(), k + 1, MPFR_RNDN);
        Real t(Bits{work});
        mpfr_set_q(t.get(), (d[static_cast<std::size_t>(k)] - dn).get_mpq().get_mpq_t(), MPFR_RNDN);
        t /= pow(base, static_cast<long>(s));
        if (k % 2 == 0) {
            sum += t;
        } else {
            sum -= t;
        }
    }
    Real dn_real(Bits{work});
    mpfr_set_q(dn_real.get(), dn.get_mpq().get_mpq_t(), MPFR_RNDN);
    Real eta = -sum / dn_real;

    Real factor(Bits{work}); // 1 - 2^{1-s}
    mpfr_set_ui(factor.get(), 1, MPFR_RNDN);
    Real p(Bits{work});
    mpfr_set_ui(p.get(), 1, MPFR_RNDN);
    mpfr_div_2si(p.get(), p.get(), s - 1, MPFR_RNDN);
    factor -= p;
    Real out(Bits{bits});
    mpfr_div(out.get(), eta.get(), factor.get(), MPFR_RNDN);
    return out;
}

Real ldexp_one(long e, mpfr_prec_t bits)
{
    Real r(Bits{bits});
    mpfr_set_ui(r.get(), 1, MPFR_RNDN);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

} // namespace

Real pi(mpfr_prec_t bits)
{
    return memo(Key::Pi, 0, bits, [bits] { return mpfr_pi(bits); });
}

Real pi_squared(mpfr_prec_t bits)
{
    const Real p = pi(bits);
    return p * p;
}

Real log2(mpfr_prec_t bits)
{
    return memo(Key::Log2, 0, bits, [bits] { return log2_series(bits); });
}

Real euler_gamma(mpfr_prec_t bits)
{
    return memo(Key::Gamma, 0, bits, [bits] { return mpfr_euler_gamma(bits); });
}

Real zeta(int m, mpfr_prec_t bits)
{
    if (m < 2) {
        throw DomainError("zeta(" + std::to_string(m) + ") is not a convergent value");
    }
    return memo(Key::Zeta, m, bits, [m, bits] { return zeta_borwein(m, bits); });
}

Real hurwitz_zeta(int s, const Real& a)
{
    if (s < 2) {
        throw DomainError("hurwitz_zeta needs s >= 2");
    }
    if (a.sign() <= 0) {
        throw DomainError("hurwitz_zeta needs a > 0");
    }
    const mpfr_prec_t bits = a.precision() + 16;
    const long shift = static_cast<long>(bits / 3) + 2L * s + 10;
    const Real eps = ldexp_one(-static_cast<long>(bits), bits);

    Real x(Bits{bits});
    mpfr_set(x.get(), a.get(), MPFR_RNDN);
    Real sum(Bits{bits});
    for (long k = 0; k < shift; ++k) {
        sum += pow(x, -static_cast<long>(s));
        x += Real(1L);
    }
    // x = a + shift
    Real tail = pow(x, 1L - s) / Real(static_cast<long>(s - 1));
    tail += pow(x, -static_cast<long>(s)) / Real(2L);

    // sum_j B_{2j}/(2j)! s(s+1)...(s+2j-2) x^{-s-2j+1}
    Real rising(Bits{bits}); // s(s+1)...(s+2j-2)
    mpfr_set_si(rising.get(), s, MPFR_RNDN);
    const Real inv_x2 = Real(1L) / (x * x);
    Real xpow = pow(x, -static_cast<long>(s) - 1); // x^{-s-2j+1} at j = 1
    const auto& table = BernoulliTable::shared();
    for (std::size_t j = 1; 2 * j <= table.capacity(); ++j) {
        Real c(Bits{bits});
        mpfr_set_q(c.get(), (table[2 * j] / Rational(factorial(2 * j))).get_mpq().get_mpq_t(),
                   MPFR_RNDN);
        const Real t = c * rising * xpow;
        tail += t;
        if (abs(t) < eps * abs(tail)) {
            break;
        }
        rising *= Real(static_cast<long>(s + 2 * j - 1)) * Real(static_cast<long>(s + 2 * j));
        xpow *= inv_x2;
    }
    sum += tail;
    Real out(Bits{a.precision()});
    mpfr_set(out.get(), sum.get(), MPFR_RNDN);
    return out;
}

Real digamma(const Real& a)
{
    if (a.sign() <= 0) {
        throw DomainError("digamma is only provided for a > 0");
    }
    const mpfr_prec_t bits = a.precision() + 16;
    const long shift = static_cast<long>(bits / 3) + 10;
    const Real eps = ldexp_one(-static_cast<long>(bits), bits);

    Real x(Bits{bits});
    mpfr_set(x.get(), a.get(), MPFR_RNDN);
    Real recip(Bits{bits});
    for (long k = 0; k < shift; ++k) {
        recip += Real(1L) / x;
        x += Real(1L);
    }
    // psi(x) ~ log x - 1/(2x) - sum_j B_{2j} / (2j x^{2j})
    Real value = log(x) - Real(1L) / (Real(2L) * x);
    const Real inv_x2 = Real(1L) / (x * x);
    Real xpow = inv_x2;
    const auto& table = BernoulliTable::shared();
    for (std::size_t j = 1; 2 * j <= table.capacity(); ++j) {
        Real c(Bits{bits});
        mpfr_set_q(c.get(), (table[2 * j] / Rational(static_cast<long>(2 * j))).get_mpq().get_mpq_t(),
                   MPFR_RNDN);
        const Real t = c * xpow;
        value -= t;
        if (abs(t) < eps) {
            break;
        }
        xpow *= inv_x2;
    }
    value -= recip;
    Real out(Bits{a.precision()});
    mpfr_set(out.get(), value.get(), MPFR_RNDN);
    return out;
}

} // namespace pmlv::constants
