#include <algorithm>
#include <cmath>

#include "chain_sum.hpp"
#include "pmlv/errors.hpp"
#include "pmlv/lvalues.hpp"

namespace pmlv {

std::string to_string(Convergence c)
{
    switch (c) {
    case Convergence::Absolute:
        return "absolute";
    case Convergence::Conditional:
        return "conditional";
    case Convergence::Divergent:
        return "divergent";
    }
    return "?";
}

Convergence classify(int M, const std::vector<int>& weights)
{
    const bool has_one = std::find(weights.begin(), weights.end(), 1) != weights.end();
    if (!has_one) {
        return Convergence::Absolute;
    }
    return M == 1 ? Convergence::Divergent : Convergence::Conditional;
}

LValueSpec LValueSpec::make(int N, int M, std::vector<int> weights)
{
    if (N < 1 || M < 1) {
        throw DomainError("N and M must be positive");
    }
    for (int w : weights) {
        if (w < 1) {
            throw DomainError("weights must be positive, got " + std::to_string(w));
        }
    }
    if (classify(M, weights) == Convergence::Divergent) {
        throw DomainError("divergent: a weight equal to 1 with M = 1 gives a harmonic-type sum");
    }
    return LValueSpec(N, M, std::move(weights));
}

LValueSpec LValueSpec::uniform(int N, int M, int n, int k)
{
    if (k < 0) {
        throw DomainError("depth must be nonnegative");
    }
    return make(N, M, std::vector<int>(static_cast<std::size_t>(k), n));
}

Convergence LValueSpec::convergence() const
{
    return classify(M_, weights_);
}

Rational nu(long x)
{
    return pow2(1 - x) - Rational(1);
}

Rational nu_tilde(long x)
{
    return pow2(x - 1) - Rational(1);
}

namespace {

void check_options(const OracleOptions& opts)
{
    if (opts.truncation < 10 || opts.truncation > 100000000L) {
        throw RangeError("truncation must lie in [10, 10^8]");
    }
    if (opts.digits < 10 || opts.digits > 100) {
        throw RangeError("precision must lie in [10, 100] digits");
    }
}

// Every sum is extrapolated: the window means A(T/4), A(T/2), A(T) are fitted
// to L + a/T + b/T^2, giving L = (8 A(T) - 6 A(T/2) + A(T/4)) / 3. The error
// estimate is the distance to the two-point fit 2 A(T) - A(T/2).
OracleResult finish(const detail::ChainRun& run, bool averaged, double tolerance)
{
    OracleResult r;
    r.partial_sum = run.last;
    r.averaged = averaged;
    Complex three = Complex(8L) * run.full_avg - Complex(6L) * run.half_avg + run.quarter_avg;
    three *= Real(Rational(1, 3));
    const Complex two = Complex(2L) * run.full_avg - run.half_avg;
    r.error_estimate = abs(three - two);
    r.value = std::move(three);
    r.flagged = r.error_estimate.to_double() > tolerance;
    return r;
}

OracleResult exact_one()
{
    OracleResult r;
    r.value = Complex(1L);
    r.partial_sum = Complex(1L);
    r.error_estimate = Real(0L);
    return r;
}

OracleResult run_plan(const detail::ChainPlan& plan, const OracleOptions& opts)
{
    return finish(detail::run_chain(plan, opts.truncation), plan.root_order > 1, opts.tolerance);
}

// Accumulates a + b with summed error estimates.
void accumulate(OracleResult& into, const OracleResult& term)
{
    into.value += term.value;
    into.partial_sum += term.partial_sum;
    into.error_estimate += term.error_estimate;
    into.averaged = into.averaged || term.averaged;
}

OracleResult zero_result()
{
    OracleResult r;
    r.value = Complex(0L);
    r.partial_sum = Complex(0L);
    r.error_estimate = Real(0L);
    return r;
}

} // namespace

OracleResult oracle_eval(const LValueSpec& spec, const OracleOptions& opts)
{
    check_options(opts);
    WorkingPrecision scope(opts.digits);
    if (spec.depth() == 0) {
        return exact_one();
    }
    detail::ChainPlan plan;
    plan.root_order = spec.M();
    plan.diag_divisor = spec.N();
    for (int w : spec.weights()) {
        plan.levels.push_back({w, 1, 1});
    }
    return run_plan(plan, opts);
}

OracleResult strict_sum_oracle(int N, int M, int n, const Composition& r, const OracleOptions& opts)
{
    check_options(opts);
    if (N < 1 || M < 1 || n < 1) {
        throw DomainError("N, M and n must be positive");
    }
    WorkingPrecision scope(opts.digits);
    if (r.empty()) {
        return exact_one();
    }
    detail::ChainPlan plan;
    plan.root_order = M;
    plan.diag_divisor = 0;
    std::vector<int> weights;
    for (int part : r) {
        if (part < 1) {
            throw DomainError("multiplicities must be positive");
        }
        plan.levels.push_back({n * part, part, part > 1 ? N : 1});
        weights.push_back(n * part);
    }
    if (classify(M, weights) == Convergence::Divergent) {
        throw DomainError("divergent strict sum: weight 1 with M = 1");
    }
    return run_plan(plan, opts);
}

OracleResult multiplicity_sum(int N, int M, int n, const Partition& lambda, const OracleOptions& opts)
{
    if (lambda.empty()) {
        check_options(opts);
        WorkingPrecision scope(opts.digits);
        return exact_one();
    }
    WorkingPrecision scope(opts.digits);
    OracleResult total = zero_result();
    for (const auto& r : distinct_permutations(lambda)) {
        accumulate(total, strict_sum_oracle(N, M, n, r, opts));
    }
    total.flagged = total.error_estimate.to_double() > opts.tolerance;
    return total;
}

OracleResult U_d_oracle(int N, int M, int n, int d, const OracleOptions& opts)
{
    check_options(opts);
    if (d < 0) {
        throw DomainError("d must be nonnegative");
    }
    WorkingPrecision scope(opts.digits);
    if (d == 0) {
        return exact_one();
    }
    OracleResult total = zero_result();
    for (const auto& mu : enumerate_partitions(d)) {
        accumulate(total, multiplicity_sum(N, M, n, scale(mu, 2), opts));
    }
    total.flagged = total.error_estimate.to_double() > opts.tolerance;
    return total;
}

namespace {

// Newton's identities. sign = +1 for h, -1 for e:
//   r c_r = sum_{j=1}^{r} sign^{j-1} c_{r-j} p_j.
OracleResult newton(const std::vector<OracleResult>& p, int r, int sign, double tolerance)
{
    std::vector<Complex> c{Complex(1L)};
    std::vector<Real> err{Real(0L)};
    for (int m = 1; m <= r; ++m) {
        Complex acc(0L);
        Real acc_err(0L);
        for (int j = 1; j <= m; ++j) {
            Complex term = c[static_cast<std::size_t>(m - j)] * p[static_cast<std::size_t>(j)].value;
            if (sign < 0 && j % 2 == 0) {
                term = -term;
            }
            acc += term;
            acc_err += abs(c[static_cast<std::size_t>(m - j)]) * p[static_cast<std::size_t>(j)].error_estimate
                     + err[static_cast<std::size_t>(m - j)] * abs(p[static_cast<std::size_t>(j)].value);
        }
        acc *= Real(Rational(1, m));
        acc_err /= static_cast<long>(m);
        c.push_back(std::move(acc));
        err.push_back(std::move(acc_err));
    }
    OracleResult out;
    out.value = c.back();
    out.partial_sum = c.back();
    out.error_estimate = err.back();
    for (std::size_t j = 1; j < p.size(); ++j) {
        out.averaged = out.averaged || p[j].averaged;
    }
    out.flagged = out.error_estimate.to_double() > tolerance;
    return out;
}

} // namespace

OracleResult complete_symmetric_oracle(int N, int M, int n, int d, const OracleOptions& opts)
{
    check_options(opts);
    if (N < 1 || M < 1 || n < 1 || d < 0) {
        throw DomainError("invalid parameters for the h_d oracle");
    }
    WorkingPrecision scope(opts.digits);
    std::vector<OracleResult> p(1);
    for (int j = 1; j <= d; ++j) {
        detail::ChainPlan plan;
        plan.root_order = M;
        plan.levels.push_back({2 * n * j, 2 * j, N});
        p.push_back(run_plan(plan, opts));
    }
    return newton(p, d, +1, opts.tolerance);
}

OracleResult elementary_symmetric_oracle(int M, int n, int r, const OracleOptions& opts)
{
    check_options(opts);
    if (M < 1 || n < 1 || r < 0) {
        throw DomainError("invalid parameters for the e_r oracle");
    }
    if (n == 1 && M == 1 && r > 0) {
        throw DomainError("divergent: e_r at x_m = 1/m");
    }
    WorkingPrecision scope(opts.digits);
    std::vector<OracleResult> p(1);
    for (int j = 1; j <= r; ++j) {
        detail::ChainPlan plan;
        plan.root_order = M;
        plan.levels.push_back({n * j, j, 1});
        p.push_back(run_plan(plan, opts));
    }
    return newton(p, r, -1, opts.tolerance);
}

std::vector<Rational> finite_partial_S2_all(int k, long p)
{
    if (k < 1 || k > 6) {
        throw CapacityError("finite_partial_S2 supports 1 <= k <= 6, got " + std::to_string(k));
    }
    if (p < 1 || p > 100000) {
        throw CapacityError("finite_partial_S2 supports 1 <= p <= 10^5, got " + std::to_string(p));
    }
    const unsigned long top = static_cast<unsigned long>(2 * p);

    // Common denominator L = lcm(1..2p); depth t is carried scaled by L^{2t}
    // so the whole DP stays in the integers.
    BigInt L = 1;
    for (unsigned long i = 2; i <= top; ++i) {
        mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), i);
    }
    const auto K = static_cast<std::size_t>(k);
    std::vector<BigInt> b(K), P(K);
    BigInt q, tmp;
    for (unsigned long i = 1; i <= top; ++i) {
        mpz_divexact_ui(q.get_mpz_t(), L.get_mpz_t(), i);
        q *= q;
        if (i % 2 == 1) {
            q = -q;
        }
        b[0] = q;
        for (std::size_t t = 1; t < K; ++t) {
            tmp = P[t - 1];
            if (i % 2 == 0) {
                tmp += b[t - 1];
            }
            b[t] = q * tmp;
        }
        for (std::size_t t = 0; t < K; ++t) {
            P[t] += b[t];
        }
    }
    std::vector<Rational> out;
    BigInt scale = L * L;
    BigInt denom = scale;
    for (std::size_t t = 0; t < K; ++t) {
        out.emplace_back(P[t], denom);
        denom *= scale;
    }
    return out;
}

Rational finite_partial_S2(int k, long p)
{
    return finite_partial_S2_all(k, p).back();
}

} // namespace pmlv
