#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pmlv {

struct VerifyOptions {
    std::string suite = "all";
    int max_k = 3;
    long truncation = 1000000;
    int digits = 30;
    int jobs = 1;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::optional<double> gap;
    std::optional<double> tolerance;
    std::string detail;
};

// "all" plus the individual suite names, in run order.
const std::vector<std::string>& verify_suites();

// Runs the requested suite (or every suite). Independent grid points are
// spread over up to opts.jobs threads; results come back in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

nlohmann::json to_json(const CheckResult& c);

// The coefficients of p_n o h_k in the h basis, read off a brute-force
// expansion of h_k(x_1^n, ..., x_v^n) - sum_lambda c_lambda h_lambda(x) in
// v = 2n variables. Returns true when the difference vanishes identically.
bool plethysm_expansion_matches(int n, int k);

} // namespace pmlv
