#pragma once

// Reference computations used only by the tests. None of them share code with
// the library routines they check.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;

// Partition numbers from Euler's pentagonal recurrence.
inline std::vector<long> partition_counts(int upto)
{
    std::vector<long> p(static_cast<std::size_t>(upto) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= upto; ++n) {
        long total = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > n) {
                break;
            }
            const long sign = (j % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                total += sign * p[static_cast<std::size_t>(n - g2)];
            }
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

// B_0..B_n by the Akiyama-Tanigawa algorithm (B_1 = +1/2 there, flipped here).
inline std::vector<Q> bernoulli_numbers(int n)
{
    std::vector<Q> out;
    std::vector<Q> a(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = Q(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
            a[static_cast<std::size_t>(j - 1)].canonicalize();
        }
        out.push_back(a[0]);
    }
    if (n >= 1) {
        out[1] = -out[1];
    }
    return out;
}

// Brute-force truncated sum over 1 <= i_1 <= ... <= i_k <= T with the
// coincidence rule and root-of-unity numerators, in long double.
inline std::complex<long double> nested_sum(int N, int M, const std::vector<int>& weights, long T, bool strict = false)
{
    const long double two_pi = 6.283185307179586476925286766559L;
    const std::size_t k = weights.size();
    std::vector<long> idx(k, 1);
    std::complex<long double> total = 0;
    std::function<void(std::size_t, long, std::complex<long double>)> walk =
        [&](std::size_t t, long lo, std::complex<long double> acc) {
            if (t == k) {
                total += acc;
                return;
            }
            for (long i = lo; i <= T; ++i) {
                if (t > 0 && i == idx[t - 1] && (strict || i % N != 0)) {
                    continue;
                }
                idx[t] = i;
                const long double ang = two_pi * static_cast<long double>(i % M) / M;
                const std::complex<long double> w(std::cos(ang), std::sin(ang));
                walk(t + 1, i, acc * w / std::pow(static_cast<long double>(i), weights[t]));
            }
        };
    walk(0, 1, 1.0L);
    return total;
}

// Exact brute force of the N = M = 2, weight-2 truncated sums up to 2p.
inline Q finite_partial_S2(int k, long p)
{
    Q total = 0;
    std::function<void(int, long, long, Q)> walk = [&](int depth, long lo, long prev, Q acc) {
        if (depth == k) {
            total += acc;
            return;
        }
        for (long i = lo; i <= 2 * p; ++i) {
            if (depth > 0 && i == prev && i % 2 != 0) {
                continue;
            }
            Q term(i % 2 == 0 ? 1 : -1, i * i);
            walk(depth + 1, i, i, acc * term);
        }
    };
    walk(0, 1, 0, Q(1));
    return total;
}

// Number of nonnegative integer matrices with row sums rows and column sums
// cols, i.e. the coefficient of m_cols in h_rows.
inline long count_matrices(const std::vector<int>& rows, const std::vector<int>& cols)
{
    std::function<long(std::size_t, std::vector<int>)> go = [&](std::size_t r, std::vector<int> left) -> long {
        if (r == rows.size()) {
            for (int c : left) {
                if (c != 0) {
                    return 0;
                }
            }
            return 1;
        }
        long ways = 0;
        std::vector<int> row(left.size(), 0);
        std::function<void(std::size_t, int)> fill = [&](std::size_t c, int remaining) {
            if (c + 1 == left.size()) {
                if (remaining <= left[c]) {
                    row[c] = remaining;
                    std::vector<int> next = left;
                    for (std::size_t j = 0; j < left.size(); ++j) {
                        next[j] -= row[j];
                    }
                    ways += go(r + 1, next);
                }
                return;
            }
            for (int x = 0; x <= std::min(remaining, left[c]); ++x) {
                row[c] = x;
                fill(c + 1, remaining - x);
            }
        };
        if (left.empty()) {
            return rows[r] == 0 ? go(r + 1, left) : 0;
        }
        fill(0, rows[r]);
        return ways;
    };
    return go(0, cols);
}

// Partitions of n as plain vectors, any order.
inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            go(left - p, p);
            cur.pop_back();
        }
    };
    go(n, n);
    return out;
}

// Coefficients c_lambda with p_n o h_k = sum_lambda c_lambda h_lambda, by
// solving c N = [mu is n times a partition] with N_{lambda mu} the matrix
// counts, over the rationals.
inline std::map<std::vector<int>, Q> plethysm_h_coefficients(int n, int k)
{
    const auto parts = partitions(n * k);
    const std::size_t P = parts.size();
    // unknowns c_lambda; equations indexed by mu: sum_lambda c_lambda N[lambda][mu] = rhs[mu]
    std::vector<std::vector<Q>> A(P, std::vector<Q>(P + 1));
    for (std::size_t mu = 0; mu < P; ++mu) {
        for (std::size_t la = 0; la < P; ++la) {
            A[mu][la] = count_matrices(parts[la], parts[mu]);
        }
        bool scaled = true;
        for (int part : parts[mu]) {
            scaled = scaled && part % n == 0;
        }
        A[mu][P] = scaled ? 1 : 0;
    }
    for (std::size_t col = 0, row = 0; col < P && row < P; ++col) {
        std::size_t piv = row;
        while (piv < P && A[piv][col] == 0) {
            ++piv;
        }
        if (piv == P) {
            continue;
        }
        std::swap(A[piv], A[row]);
        const Q inv = 1 / A[row][col];
        for (auto& x : A[row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < P; ++r) {
            if (r != row && A[r][col] != 0) {
                const Q f = A[r][col];
                for (std::size_t c = col; c <= P; ++c) {
                    A[r][c] -= f * A[row][c];
                }
            }
        }
        ++row;
    }
    std::map<std::vector<int>, Q> out;
    for (std::size_t la = 0; la < P; ++la) {
        out[parts[la]] = A[la][P];
    }
    return out;
}

// exp of a polynomial with zero constant term by summing a^j / j!.
inline std::vector<Q> naive_exp(const std::vector<Q>& a)
{
    const std::size_t T = a.size();
    std::vector<Q> out(T, 0), power(T, 0);
    out[0] = 1;
    power[0] = 1;
    Q fact = 1;
    for (std::size_t j = 1; j < T; ++j) {
        std::vector<Q> next(T, 0);
        for (std::size_t x = 0; x < T; ++x) {
            for (std::size_t y = 0; x + y < T; ++y) {
                next[x + y] += power[x] * a[y];
            }
        }
        power = next;
        fact *= static_cast<unsigned long>(j);
        for (std::size_t x = 0; x < T; ++x) {
            out[x] += power[x] / fact;
        }
    }
    return out;
}

inline std::mt19937_64 rng(std::uint64_t seed = 20240601)
{
    return std::mt19937_64(seed);
}

} // namespace oracle
