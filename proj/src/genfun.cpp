#include "pmlv/errors.hpp"
#include "pmlv/lvalues.hpp"

namespace pmlv {

namespace {

void check_common(int M, int n, int order)
{
    if (M < 1 || n < 1) {
        throw DomainError("M and n must be positive");
    }
    if (order < 0) {
        throw DomainError("series order must be nonnegative");
    }
}

TruncatedSeries<SymbolicValue> project_rational(const TruncatedSeries<CyclotomicSymbolic>& s)
{
    std::vector<SymbolicValue> out;
    for (const auto& c : s.coeffs()) {
        out.push_back(rational_part(c));
    }
    return TruncatedSeries<SymbolicValue>(std::move(out));
}

const TruncatedSeries<SymbolicValue>& gamma_free(const TruncatedSeries<SymbolicValue>& s)
{
    for (const auto& c : s.coeffs()) {
        assert_gamma_free(c);
    }
    return s;
}

} // namespace

TruncatedSeries<SymbolicValue> genfun_U_exact(int N, int M, int n, int order)
{
    check_common(M, n, order);
    if (N < 1 || N % M != 0) {
        throw DomainError("exact U series needs M | N (got N = " + std::to_string(N)
                          + ", M = " + std::to_string(M) + ")");
    }
    // log U = sum_{j < 2n} log Gamma(1 - w_{2n}^j x / N)
    TruncatedSeries<CyclotomicSymbolic> log_u(order);
    for (int j = 0; j < 2 * n; ++j) {
        const CyclotomicNumber c = CyclotomicNumber::root_of_unity(2 * n, j) * Rational(1, N);
        log_u += log_gamma_one_minus<CyclotomicSymbolic>(CyclotomicSymbolic(c), order);
    }
    return gamma_free(series_exp(project_rational(log_u)));
}

TruncatedSeries<Complex> genfun_U_numeric(int N, int M, int n, int order, int digits)
{
    check_common(M, n, order);
    if (N < 1) {
        throw DomainError("N must be positive");
    }
    WorkingPrecision scope(digits);
    // log U = sum_{k=1}^{M} sum_{j<2n} log Gamma(k/M - c_{jk} x) - log Gamma(k/M),
    // c_{jk} = w_{2n}^j w_{Mn}^{kN} / (NM) = w_{2Mn}^{jM + 2kN} / (NM).
    TruncatedSeries<Complex> log_u(order);
    const Real scale = Real(Rational(1, static_cast<long>(N) * M));
    for (int k = 1; k <= M; ++k) {
        for (int j = 0; j < 2 * n; ++j) {
            Complex c = Complex::unit_root(2L * M * n, static_cast<long>(j) * M + 2L * k * N);
            c *= scale;
            log_u += log_gamma_at<Complex>(Rational(k, M), c, order);
        }
    }
    return series_exp(log_u);
}

namespace {

// w_{kj} = w_{2n}^{2j-1} w_{Mn}^k = w_{2Mn}^{(2j-1)M + 2k}
long s1_exponent(int M, int k, int j)
{
    return static_cast<long>(2 * j - 1) * M + 2L * k;
}

void check_s1(int M, int n)
{
    if (M == 1 && n == 1) {
        throw DomainError("divergent: S(1; 1^r) with M = 1");
    }
}

} // namespace

TruncatedSeries<SymbolicValue> genfun_S1_exact(int M, int n, int order)
{
    check_common(M, n, order);
    if (M > 2) {
        throw DomainError("exact S1 series needs M in {1, 2}, got " + std::to_string(M));
    }
    check_s1(M, n);
    // log S1 = -sum_{k=1}^{M} sum_{j=1}^{n} log Gamma(k/M - w_{kj} x / M) - log Gamma(k/M)
    TruncatedSeries<CyclotomicSymbolic> log_s(order);
    for (int k = 1; k <= M; ++k) {
        for (int j = 1; j <= n; ++j) {
            const CyclotomicNumber c =
                CyclotomicNumber::root_of_unity(2L * M * n, s1_exponent(M, k, j)) * Rational(1, M);
            log_s -= log_gamma_at<CyclotomicSymbolic>(Rational(k, M), CyclotomicSymbolic(c), order);
        }
    }
    return gamma_free(series_exp(project_rational(log_s)));
}

TruncatedSeries<Complex> genfun_S1_numeric(int M, int n, int order, int digits)
{
    check_common(M, n, order);
    check_s1(M, n);
    WorkingPrecision scope(digits);
    TruncatedSeries<Complex> log_s(order);
    const Real scale = Real(Rational(1, M));
    for (int k = 1; k <= M; ++k) {
        for (int j = 1; j <= n; ++j) {
            Complex c = Complex::unit_root(2L * M * n, s1_exponent(M, k, j));
            c *= scale;
            log_s -= log_gamma_at<Complex>(Rational(k, M), c, order);
        }
    }
    return series_exp(log_s);
}

TruncatedSeries<SymbolicValue> genfun_P_exact(int N, int M, int n, int order)
{
    return gamma_free(genfun_U_exact(N, M, n, order) * genfun_S1_exact(M, n, order));
}

TruncatedSeries<Complex> genfun_P_numeric(int N, int M, int n, int order, int digits)
{
    WorkingPrecision scope(digits);
    return genfun_U_numeric(N, M, n, order, digits) * genfun_S1_numeric(M, n, order, digits);
}

GenfunSeries genfun_U(int N, int M, int n, int order, GenfunMode mode, int digits)
{
    GenfunSeries s;
    s.mode = mode;
    if (mode == GenfunMode::Exact) {
        s.exact = genfun_U_exact(N, M, n, order);
    } else {
        s.numeric = genfun_U_numeric(N, M, n, order, digits);
    }
    return s;
}

GenfunSeries genfun_S1(int M, int n, int order, GenfunMode mode, int digits)
{
    GenfunSeries s;
    s.mode = mode;
    if (mode == GenfunMode::Exact) {
        s.exact = genfun_S1_exact(M, n, order);
    } else {
        s.numeric = genfun_S1_numeric(M, n, order, digits);
    }
    return s;
}

GenfunSeries genfun_P(int N, int M, int n, int order, GenfunMode mode, int digits)
{
    GenfunSeries s;
    s.mode = mode;
    if (mode == GenfunMode::Exact) {
        s.exact = genfun_P_exact(N, M, n, order);
    } else {
        s.numeric = genfun_P_numeric(N, M, n, order, digits);
    }
    return s;
}

TruncatedSeries<SymbolicValue> genfun_P2(int n, int order)
{
    check_common(1, n, order);
    TruncatedSeries<CyclotomicSymbolic> log_p(order);
    if (n == 1 && order >= 1) {
        log_p[1] = to_cyclotomic(-sym::log2());
    }
    for (int j = 0; j < n; ++j) {
        const CyclotomicNumber w = CyclotomicNumber::root_of_unity(n, j);
        auto half = log_gamma_one_minus<CyclotomicSymbolic>(CyclotomicSymbolic(w * Rational(1, 2)), order);
        log_p += half;
        log_p += half;
        log_p -= log_gamma_one_minus<CyclotomicSymbolic>(CyclotomicSymbolic(w), order);
    }
    return gamma_free(series_exp(project_rational(log_p)));
}

TruncatedSeries<SymbolicValue> adz_exponential(int n, int order)
{
    check_common(1, n, order);
    TruncatedSeries<SymbolicValue> a(order);
    for (int m = 1; n * m <= order; ++m) {
        if (n * m >= 2) {
            a[n * m] = nu(n * m) * Rational(1, m) * sym::zeta(n * m);
        }
    }
    return series_exp(a);
}

} // namespace pmlv
