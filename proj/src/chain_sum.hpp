#pragma once

// Internal dynamic program shared by the oracle sums.
//
// A chain of levels t = 1..k evaluates
//   sum_{j_1 <= j_2 <= ... <= j_k <= T} prod_t f_t(j_t)
// where f_t(j) = [divisor_t | j] w_M^{exponent_t j} / j^{weight_t}, and two
// adjacent indices may coincide only at j with diag_divisor | j
// (diag_divisor = 0 forbids coincidences, giving a strict sum).
//
// B_1(j) = f_1(j), B_{t+1}(j) = f_{t+1}(j) (P_t(j) + [diag ok] B_t(j)),
// P_t(j) = sum_{j' < j} B_t(j'), so each step costs O(k).

#include <vector>

#include "pmlv/real.hpp"

namespace pmlv::detail {

struct ChainLevel {
    int weight = 1;
    int exponent = 1;
    int divisor = 1;
};

struct ChainPlan {
    std::vector<ChainLevel> levels;
    int root_order = 1;   // M
    int diag_divisor = 0; // N, or 0 for strict
};

struct ChainRun {
    Complex last;        // S(T)
    Complex quarter_avg; // A(T/4), mean of the M partial sums ending at T/4
    Complex half_avg;    // A(T/2)
    Complex full_avg;    // A(T)
    Complex half;        // S(T/2)
};

ChainRun run_chain(const ChainPlan& plan, long truncation);

} // namespace pmlv::detail
