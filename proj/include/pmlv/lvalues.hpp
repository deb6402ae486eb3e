#pragma once

#include <string>
#include <vector>

#include "pmlv/partition.hpp"
#include "pmlv/rational.hpp"
#include "pmlv/real.hpp"
#include "pmlv/series.hpp"
#include "pmlv/symbolic.hpp"

namespace pmlv {

enum class Convergence { Absolute, Conditional, Divergent };

std::string to_string(Convergence c);

// Parameters of S^{(N,M)}_k(n_1, ..., n_k). Divergent inputs (a weight 1 with
// M = 1) are rejected by make().
class LValueSpec {
public:
    static LValueSpec make(int N, int M, std::vector<int> weights);
    // weights = (n, n, ..., n), k copies
    static LValueSpec uniform(int N, int M, int n, int k);

    int N() const { return N_; }
    int M() const { return M_; }
    const std::vector<int>& weights() const { return weights_; }
    int depth() const { return static_cast<int>(weights_.size()); }
    Convergence convergence() const;

private:
    LValueSpec(int N, int M, std::vector<int> weights)
        : N_(N), M_(M), weights_(std::move(weights)) {}

    int N_;
    int M_;
    std::vector<int> weights_;
};

Convergence classify(int M, const std::vector<int>& weights);

// eps^{(N)}_{ij}: 0 iff i == j and N does not divide i.
struct EpsilonRule {
    int N = 1;
    bool operator()(long i, long j) const { return i != j || i % N == 0; }
};

// nu(x) = 2^{1-x} - 1, nu~(x) = 2^{x-1} - 1
Rational nu(long x);
Rational nu_tilde(long x);

struct OracleOptions {
    long truncation = 1000000;
    int digits = 30;
    // Results whose error estimate exceeds this are flagged.
    double tolerance = 1e-8;
};

struct OracleResult {
    Complex value;
    Real error_estimate;
    Complex partial_sum; // raw truncated sum, before any averaging
    bool averaged = false; // window means over M truncation points were used
    bool flagged = false;
};

// Truncated DP evaluation of S^{(N,M)}_k(weights). Partial sums are averaged
// over M consecutive truncation points at T/4, T/2 and T, and the three means
// are extrapolated to remove the 1/T and 1/T^2 tails.
OracleResult oracle_eval(const LValueSpec& spec, const OracleOptions& opts = {});

// Exact sum over 1 <= i_1 <= ... <= i_k <= 2p with the N = 2 rule and terms
// (-1)^{sum i} / prod i^2. k <= 6, p <= 10^5.
Rational finite_partial_S2(int k, long p);
// All depths 1..k at once; entry j - 1 holds depth j.
std::vector<Rational> finite_partial_S2_all(int k, long p);

// Strict sum over j_1 < ... < j_l of prod w_M^{r_t j_t} / j_t^{n r_t} with
// N | j_t whenever r_t > 1.
OracleResult strict_sum_oracle(int N, int M, int n, const Composition& r,
                               const OracleOptions& opts = {});

// sum over r in P(lambda) of the strict sums: S^{(N,M)}(n; lambda).
OracleResult multiplicity_sum(int N, int M, int n, const Partition& lambda,
                              const OracleOptions& opts = {});

// U_d = sum_{mu |- d} S(n; 2 mu).
OracleResult U_d_oracle(int N, int M, int n, int d, const OracleOptions& opts = {});

// h_d at x_m = w_M^{2Nm} / (Nm)^{2n}, via Newton's identities from power sums.
OracleResult complete_symmetric_oracle(int N, int M, int n, int d, const OracleOptions& opts = {});

// e_r at x_m = w_M^m / m^n, via Newton's identities; equals S(n; 1^r).
OracleResult elementary_symmetric_oracle(int M, int n, int r, const OracleOptions& opts = {});

enum class GenfunMode { Exact, Numeric };

// Exact-mode series carry symbolic coefficients; numeric ones carry complex
// values at the working precision.
struct GenfunSeries {
    GenfunMode mode = GenfunMode::Exact;
    TruncatedSeries<SymbolicValue> exact{0};
    TruncatedSeries<Complex> numeric{0};
};

// Generating function of U_d: the coefficient of x^{2nd} is U_d.
// Exact mode requires M | N.
TruncatedSeries<SymbolicValue> genfun_U_exact(int N, int M, int n, int order);
TruncatedSeries<Complex> genfun_U_numeric(int N, int M, int n, int order, int digits);

// Generating function of S(n; 1^r): the coefficient of x^{nr}.
// Exact mode requires M in {1, 2}.
TruncatedSeries<SymbolicValue> genfun_S1_exact(int M, int n, int order);
TruncatedSeries<Complex> genfun_S1_numeric(int M, int n, int order, int digits);

// Product of the two above: the coefficient of x^{nk} is S_k(n).
TruncatedSeries<SymbolicValue> genfun_P_exact(int N, int M, int n, int order);
TruncatedSeries<Complex> genfun_P_numeric(int N, int M, int n, int order, int digits);

GenfunSeries genfun_U(int N, int M, int n, int order, GenfunMode mode, int digits = 30);
GenfunSeries genfun_S1(int M, int n, int order, GenfunMode mode, int digits = 30);
GenfunSeries genfun_P(int N, int M, int n, int order, GenfunMode mode, int digits = 30);

// The N = M = 2 specialization built directly:
// exp(-delta_{n,1} x log 2) prod_j Gamma(1 - w_n^j x/2)^2 / Gamma(1 - w_n^j x).
TruncatedSeries<SymbolicValue> genfun_P2(int n, int order);

// exp(sum_{m >= 1, nm >= 2} nu(nm)/m zeta(nm) x^{nm}).
TruncatedSeries<SymbolicValue> adz_exponential(int n, int order);

SymbolicValue Z_n_k(int n, int k);
// S_k(1) = sum_{m=0}^{k} (-log 2)^{k-m} / (k-m)! Z_1(m)
SymbolicValue closed_S_k_n1(int k);
// S_k(n) = Z_n(k), n >= 2
SymbolicValue closed_S_k_n(int n, int k);
// Dispatches on n.
SymbolicValue closed_S_k(int n, int k);

enum class BernoulliForm { Convolution, Plethysm, Zeta };

BernoulliForm parse_bernoulli_form(const std::string& name);

// S_k(2n) as a rational multiple of (pi^2)^{nk}.
SymbolicValue bernoulli_S_k_even(int n, int k, BernoulliForm form);

enum class DoubleZetaOrder { First, Second };

// First: S_2(1, 2k). Second: S_2(2k, 1). Both at N = M = 2.
SymbolicValue double_zeta_remark(int k, DoubleZetaOrder order);

struct GammaProductResult {
    Real lhs;
    Real rhs;
    Real gap;
    bool pass = false;
};

// prod_{m >= k0} prod_j (m + a_j)/(m + b_j) against
// prod_j Gamma(k0 + b_j) / Gamma(k0 + a_j); requires sum a = sum b.
GammaProductResult gamma_product_eval(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      long k_start, int digits);
bool gamma_product_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                         long k_start, int digits);

struct IdentityCheck {
    std::string name;
    Complex lhs;
    Complex rhs;
    double gap = 0;
    double tolerance = 0;
    bool pass = false;
};

struct DecompositionReport {
    int N = 0, M = 0, n = 0, k = 0;
    std::vector<IdentityCheck> checks;
    bool pass() const;
    double max_gap() const;
};

// Checks, for S^{(N,M)}_k(n):
//   S_k(n) = sum_{lambda |- k} S(n; lambda)
//   R(n; mu) = sum over vertical strips lambda / mu_{>1} of S(n; lambda)
//   S_k(n) = sum_{0 <= 2d <= k} S(n; 1^{k-2d}) U_d
//   U_d from strict sums = U_d from h_d
//   S(n; 1^r) from strict sums = e_r (= genfun_S1 coefficient when exact)
DecompositionReport lemma_decomposition_check(int N, int M, int n, int k,
                                              const OracleOptions& opts, double tolerance);

} // namespace pmlv
