#include "chain_sum.hpp"

#include <algorithm>

#include "pmlv/errors.hpp"

namespace pmlv::detail {

namespace {

long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

// Running mean of the M partial sums ending at a checkpoint.
struct Window {
    long end = 0;
    long width = 1;
    Complex acc;

    void offer(long j, const Complex& s)
    {
        if (j > end - width && j <= end) {
            acc += s;
        }
    }
    Complex mean() const
    {
        Complex out = acc;
        out *= Real(1L) / Real(width);
        return out;
    }
};

void check_plan(const ChainPlan& plan, long truncation)
{
    if (plan.root_order < 1) {
        throw DomainError("root order must be positive");
    }
    for (const auto& lv : plan.levels) {
        if (lv.weight < 1 || lv.divisor < 1) {
            throw DomainError("chain levels need positive weights and divisors");
        }
    }
    if (truncation < 4L * plan.root_order || truncation < 10) {
        throw DomainError("truncation " + std::to_string(truncation)
                          + " is too small for the averaging windows");
    }
}

// Both scalar flavours share the same loop; Real is used when every root of
// unity involved is +-1.
template <class V>
struct Scalar;

template <>
struct Scalar<Real> {
    static Real root(long order, long e)
    {
        if (order == 1 || e == 0) {
            return Real(1L);
        }
        return Real(-1L); // order 2, e = 1
    }
    static Complex widen(const Real& x) { return Complex(x); }
};

template <>
struct Scalar<Complex> {
    static Complex root(long order, long e) { return Complex::unit_root(order, e); }
    static Complex widen(const Complex& x) { return x; }
};

template <class V>
ChainRun run(const ChainPlan& plan, long T)
{
    const auto k = plan.levels.size();
    const long M = plan.root_order;
    const mpfr_prec_t bits = working_bits();

    std::vector<V> roots;
    for (long e = 0; e < M; ++e) {
        roots.push_back(Scalar<V>::root(M, e));
    }
    int wmax = 1;
    for (const auto& lv : plan.levels) {
        wmax = std::max(wmax, lv.weight);
    }

    std::vector<Real> inv_pow(static_cast<std::size_t>(wmax) + 1, Real(Bits{bits}));
    std::vector<V> B(k), P(k);
    std::vector<bool> live(k, false);
    for (std::size_t t = 0; t < k; ++t) {
        B[t] = V(Real(Bits{bits}));
        P[t] = V(Real(Bits{bits}));
    }
    V f{Real(Bits{bits})};
    V tmp{Real(Bits{bits})};

    Window w1{T / 4, M, Complex(Real(Bits{bits}))};
    Window w2{T / 2, M, Complex(Real(Bits{bits}))};
    Window w3{T, M, Complex(Real(Bits{bits}))};
    ChainRun out;

    for (long j = 1; j <= T; ++j) {
        mpfr_set_ui(inv_pow[1].get(), 1, MPFR_RNDN);
        mpfr_div_ui(inv_pow[1].get(), inv_pow[1].get(), static_cast<unsigned long>(j), MPFR_RNDN);
        for (int w = 2; w <= wmax; ++w) {
            mpfr_mul(inv_pow[w].get(), inv_pow[w - 1].get(), inv_pow[1].get(), MPFR_RNDN);
        }
        const bool diag = plan.diag_divisor > 0 && j % plan.diag_divisor == 0;
        for (std::size_t t = 0; t < k; ++t) {
            const auto& lv = plan.levels[t];
            live[t] = j % lv.divisor == 0;
            if (!live[t]) {
                continue;
            }
            f = roots[static_cast<std::size_t>(mod(static_cast<long>(lv.exponent) * j, M))];
            f *= inv_pow[lv.weight];
            if (t == 0) {
                B[0] = f;
                continue;
            }
            tmp = P[t - 1];
            if (diag && live[t - 1]) {
                tmp += B[t - 1];
            }
            tmp *= f;
            B[t] = tmp;
        }
        for (std::size_t t = 0; t < k; ++t) {
            if (live[t]) {
                P[t] += B[t];
            }
        }
        if (j > T / 4 - M) {
            const Complex s = Scalar<V>::widen(P[k - 1]);
            w1.offer(j, s);
            w2.offer(j, s);
            w3.offer(j, s);
            if (j == T / 2) {
                out.half = s;
            }
        }
    }
    out.last = Scalar<V>::widen(P[k - 1]);
    out.quarter_avg = w1.mean();
    out.half_avg = w2.mean();
    out.full_avg = w3.mean();
    return out;
}

bool real_roots_suffice(const ChainPlan& plan)
{
    return plan.root_order <= 2;
}

} // namespace

ChainRun run_chain(const ChainPlan& plan, long truncation)
{
    check_plan(plan, truncation);
    if (plan.levels.empty()) {
        ChainRun one;
        one.last = one.quarter_avg = one.half_avg = one.full_avg = one.half = Complex(1L);
        return one;
    }
    if (real_roots_suffice(plan)) {
        return run<Real>(plan, truncation);
    }
    return run<Complex>(plan, truncation);
}

} // namespace pmlv::detail
