#include <algorithm>
#include <cmath>
#include <map>

#include "pmlv/constants.hpp"
#include "pmlv/errors.hpp"
#include "pmlv/lvalues.hpp"

namespace pmlv {

GammaProductResult gamma_product_eval(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      long k_start, int digits)
{
    if (digits < 10 || digits > 100) {
        throw RangeError("precision must lie in [10, 100] digits");
    }
    Rational sa, sb;
    for (const auto& x : a) {
        sa += x;
    }
    for (const auto& x : b) {
        sb += x;
    }
    if (sa != sb) {
        throw DomainError("gamma_product_check needs sum(a) = sum(b), got " + sa.str() + " and "
                          + sb.str());
    }
    Rational lowest(0);
    double largest = 1;
    for (const auto* v : {&a, &b}) {
        for (const auto& x : *v) {
            lowest = std::min(lowest, x);
            largest = std::max(largest, std::fabs(x.to_double()));
        }
    }
    if (Rational(k_start) + lowest <= Rational(0)) {
        throw DomainError("gamma_product_check needs k_start + min(a, b) > 0");
    }

    WorkingPrecision scope(digits + 10);
    const mpfr_prec_t bits = working_bits();

    // Direct product up to K - 1, then the log of the tail from m = K:
    //   sum_{p>=2} (-1)^{p+1} (sum a^p - sum b^p) / p * zeta(p, K)
    const long K = k_start + 64 * (static_cast<long>(largest) + 1);
    Real lhs(1L);
    for (long m = k_start; m < K; ++m) {
        for (const auto& x : a) {
            lhs *= Real(Rational(m) + x);
        }
        for (const auto& x : b) {
            lhs /= Real(Rational(m) + x);
        }
    }
    const Real eps = pow(Real(2L), -static_cast<long>(bits));
    Real tail_log(0L);
    const Real Kreal(K);
    for (int p = 2; p < 4 * static_cast<int>(bits); ++p) {
        Rational diff;
        for (const auto& x : a) {
            diff += pow(x, p);
        }
        for (const auto& x : b) {
            diff -= pow(x, p);
        }
        // crude size of the remaining terms: (largest / K)^p
        const Real scale = pow(Real(largest) / Kreal, static_cast<long>(p)) * Real(static_cast<long>(a.size() + b.size()));
        if (scale < eps) {
            break;
        }
        if (diff.is_zero()) {
            continue;
        }
        Real term = Real(diff) * constants::hurwitz_zeta(p, Kreal);
        term /= static_cast<long>(p);
        if (p % 2 == 0) {
            term = -term;
        }
        tail_log += term;
    }
    lhs *= exp(tail_log);

    Real rhs(1L);
    for (const auto& x : b) {
        rhs *= gamma_function(Real(Rational(k_start) + x));
    }
    for (const auto& x : a) {
        rhs /= gamma_function(Real(Rational(k_start) + x));
    }
    GammaProductResult out;
    out.gap = abs(lhs - rhs);
    out.pass = out.gap < pow(Real(10L), -static_cast<long>(digits / 2));
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    return out;
}

bool gamma_product_check(const std::vector<Rational>& a, const std::vector<Rational>& b, long k_start,
                         int digits)
{
    return gamma_product_eval(a, b, k_start, digits).pass;
}

bool DecompositionReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

double DecompositionReport::max_gap() const
{
    double g = 0;
    for (const auto& c : checks) {
        g = std::max(g, c.gap);
    }
    return g;
}

namespace {

class StrictSums {
public:
    StrictSums(int N, int M, int n, const OracleOptions& opts) : N_(N), M_(M), n_(n), opts_(opts) {}

    const Complex& strict(const Composition& r)
    {
        auto it = strict_.find(r);
        if (it == strict_.end()) {
            it = strict_.emplace(r, strict_sum_oracle(N_, M_, n_, r, opts_).value).first;
        }
        return it->second;
    }

    // S(n; lambda)
    Complex S(const Partition& lambda)
    {
        Complex total(1L);
        if (lambda.empty()) {
            return total;
        }
        total = Complex(0L);
        for (const auto& r : distinct_permutations(lambda)) {
            total += strict(r);
        }
        return total;
    }

private:
    int N_, M_, n_;
    OracleOptions opts_;
    std::map<Composition, Complex> strict_;
};

Partition ones(int r)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(r), 1));
}

// prod_{i>2} C(m_i(lambda), #{j : lambda_j = nu_j = i})
Rational strip_weight(const Partition& lambda, const Partition& nu_part)
{
    Rational w(1);
    for (int i = 3; i <= lambda.weight(); ++i) {
        const int m = lambda.multiplicity(i);
        if (m == 0) {
            continue;
        }
        int both = 0;
        for (std::size_t j = 0; j < lambda.length(); ++j) {
            if (lambda.part(j) == i && nu_part.part(j) == i) {
                ++both;
            }
        }
        w *= binomial(m, static_cast<unsigned long>(both));
    }
    return w;
}

} // namespace

DecompositionReport lemma_decomposition_check(int N, int M, int n, int k, const OracleOptions& opts,
                                              double tolerance)
{
    if (k < 0 || k > 4) {
        throw CapacityError("lemma_decomposition_check supports 0 <= k <= 4");
    }
    WorkingPrecision scope(opts.digits);
    DecompositionReport report{N, M, n, k, {}};
    auto add = [&](std::string name, Complex lhs, Complex rhs) {
        IdentityCheck c;
        c.name = std::move(name);
        c.gap = abs(lhs - rhs).to_double();
        c.tolerance = tolerance;
        c.pass = c.gap < tolerance;
        c.lhs = std::move(lhs);
        c.rhs = std::move(rhs);
        report.checks.push_back(std::move(c));
    };

    const Complex full = oracle_eval(LValueSpec::uniform(N, M, n, k), opts).value;
    if (k == 0) {
        add("S_0 = 1", full, Complex(1L));
        return report;
    }
    StrictSums sums(N, M, n, opts);
    const auto partitions = enumerate_partitions(k);

    Complex by_lambda(0L);
    for (const auto& lambda : partitions) {
        by_lambda += sums.S(lambda);
    }
    add("S_k = sum over lambda of S(lambda)", full, by_lambda);

    Complex r_total(0L);
    for (const auto& mu : partitions) {
        const Partition big = strip_ones(mu);
        const Complex R = sums.S(big) * sums.S(ones(mu.multiplicity(1)));
        Complex rhs(0L);
        for (const auto& lambda : partitions) {
            if (is_vertical_strip(lambda, big)) {
                rhs += sums.S(lambda) * Complex(strip_weight(lambda, big));
            }
        }
        add("R(mu) by vertical strips, mu=" + mu.json(), R, rhs);
        if (big.is_even()) {
            r_total += R;
        }
    }
    add("S_k = sum of R(mu) over even mu_{>1}", full, r_total);

    // S(n; 1^r) from the exact series when available, else from e_r.
    const bool exact_s1 = M <= 2;
    TruncatedSeries<SymbolicValue> s1_series(0);
    if (exact_s1) {
        s1_series = genfun_S1_exact(M, n, n * k);
    }
    std::vector<Complex> s1;
    for (int r = 0; r <= k; ++r) {
        Complex via_e = elementary_symmetric_oracle(M, n, r, opts).value;
        if (exact_s1) {
            Complex via_series(numeric_eval(s1_series[n * r], opts.digits));
            add("S(1^" + std::to_string(r) + ") series = e_r", via_series, via_e);
            s1.push_back(via_series);
        } else {
            s1.push_back(via_e);
        }
        add("S(1^" + std::to_string(r) + ") strict = e_r", sums.S(ones(r)), s1.back());
    }

    Complex by_u(0L);
    for (int d = 0; 2 * d <= k; ++d) {
        const Complex u = U_d_oracle(N, M, n, d, opts).value;
        add("U_" + std::to_string(d) + " strict = h_d", u, complete_symmetric_oracle(N, M, n, d, opts).value);
        by_u += s1[static_cast<std::size_t>(k - 2 * d)] * u;
    }
    add("S_k = sum_d S(1^{k-2d}) U_d", full, by_u);
    return report;
}

} // namespace pmlv
