#include <functional>

#include "pmlv/cyclotomic.hpp"
#include "pmlv/errors.hpp"
#include "pmlv/lvalues.hpp"

namespace pmlv {

SymbolicValue Z_n_k(int n, int k)
{
    if (n < 1 || k < 0) {
        throw DomainError("Z_n(k) needs n >= 1 and k >= 0");
    }
    SymbolicValue total;
    for (const auto& mu : enumerate_partitions(k)) {
        if (n == 1 && mu.multiplicity(1) > 0) {
            continue;
        }
        Rational coeff = Rational(1) / z_mu(mu);
        SymbolicValue term(1L);
        for (int part : mu.parts()) {
            coeff *= nu(static_cast<long>(n) * part);
            term *= sym::zeta(n * part);
        }
        total += term * coeff;
    }
    return total;
}

SymbolicValue closed_S_k_n1(int k)
{
    if (k < 0) {
        throw DomainError("k must be nonnegative");
    }
    SymbolicValue total;
    const SymbolicValue minus_log2 = -sym::log2();
    for (int m = 0; m <= k; ++m) {
        const auto e = static_cast<unsigned long>(k - m);
        total += pow(minus_log2, k - m) * Z_n_k(1, m) * (Rational(1) / Rational(factorial(e)));
    }
    return total;
}

SymbolicValue closed_S_k_n(int n, int k)
{
    if (n < 2) {
        throw DomainError("closed_S_k_n needs n >= 2; use closed_S_k_n1 for n = 1");
    }
    return Z_n_k(n, k);
}

SymbolicValue closed_S_k(int n, int k)
{
    return n == 1 ? closed_S_k_n1(k) : closed_S_k_n(n, k);
}

BernoulliForm parse_bernoulli_form(const std::string& name)
{
    if (name == "conv") {
        return BernoulliForm::Convolution;
    }
    if (name == "plethysm") {
        return BernoulliForm::Plethysm;
    }
    if (name == "zeta") {
        return BernoulliForm::Zeta;
    }
    throw DomainError("unknown form '" + name + "' (expected conv, plethysm or zeta)");
}

namespace {

// B_{2m} / (2m)!
Rational bernoulli_ratio(int m)
{
    const auto two_m = static_cast<unsigned long>(2 * m);
    return bernoulli(two_m) / Rational(factorial(two_m));
}

Rational convolution_coefficient(int n, int k)
{
    const int total = n * k;
    std::vector<Rational> by_exponent(static_cast<std::size_t>(n));
    std::vector<Rational> ratios;
    for (int m = 0; m <= total; ++m) {
        ratios.push_back(bernoulli_ratio(m));
    }
    // weak compositions m_1 + ... + m_n = nk, tallied by sum i m_i mod n
    std::function<void(int, int, long, const Rational&)> walk =
        [&](int slot, int left, long exponent, const Rational& product) {
            if (slot == n) {
                if (left == 0) {
                    by_exponent[static_cast<std::size_t>(exponent % n)] += product;
                }
                return;
            }
            for (int m = 0; m <= left; ++m) {
                const Rational& r = ratios[static_cast<std::size_t>(m)];
                if (r.is_zero()) {
                    continue;
                }
                walk(slot + 1, left - m, exponent + static_cast<long>(slot + 1) * m, product * r);
            }
        };
    walk(0, total, 0, Rational(1));
    const CyclotomicNumber value(n, by_exponent);
    if (!value.is_rational()) {
        throw ConsistencyError("Bernoulli convolution did not reduce to a rational: " + value.str());
    }
    return value.to_rational();
}

Rational plethysm_coefficient(int n, int k)
{
    Rational total;
    for (const auto& lambda : enumerate_partitions(n * k)) {
        if (lambda.length() > static_cast<std::size_t>(n)) {
            continue;
        }
        Rational term = monomial_at_roots(lambda, n);
        if (term.is_zero()) {
            continue;
        }
        for (int part : lambda.parts()) {
            term *= bernoulli_ratio(part);
        }
        total += term;
    }
    return total;
}

} // namespace

SymbolicValue bernoulli_S_k_even(int n, int k, BernoulliForm form)
{
    if (n < 1 || k < 1) {
        throw DomainError("bernoulli_S_k_even needs n, k >= 1");
    }
    if (form == BernoulliForm::Zeta) {
        return normalize_even_zetas(Z_n_k(2 * n, k));
    }
    Rational c = form == BernoulliForm::Convolution ? convolution_coefficient(n, k)
                                                    : plethysm_coefficient(n, k);
    if ((n * k) % 2 == 1) {
        c = -c;
    }
    return SymbolicValue::of(Generator::pi_squared(), n * k) * c;
}

namespace {

// S^{(2)}_1(m) = (2^{1-m} - 1) zeta(m)
SymbolicValue single(int m)
{
    return sym::zeta(m) * nu(m);
}

} // namespace

SymbolicValue double_zeta_remark(int k, DoubleZetaOrder order)
{
    if (k < 1) {
        throw DomainError("double_zeta_remark needs k >= 1");
    }
    SymbolicValue tail;
    for (int p = 1; p <= k - 1; ++p) {
        tail += single(2 * p + 1) * sym::zeta(2 * k - 2 * p);
    }
    const SymbolicValue zl = sym::zeta(2 * k) * sym::log2();
    if (order == DoubleZetaOrder::First) {
        return single(2 * k + 1) * Rational(k + 1)
             + zl * (Rational(2) * (Rational(1) - pow2(-2 * k))) - tail;
    }
    return single(2 * k + 1) * Rational(-k) - zl + tail;
}

} // namespace pmlv
