#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmlv {

enum ExitCode { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

struct JobConfig {
    std::string command; // eval | closed | genfun | verify | table
    int N = 2;
    int M = 2;
    std::vector<int> weights; // eval; when empty, (n, ..., n) with k copies
    int n = 1;
    int k = 1;
    long truncation = 1000000;
    int digits = 30;
    std::string mode = "exact";   // exact | numeric
    std::string output = "json";  // json | csv | text
    bool normalize = false;
    std::string form = "auto";    // closed: auto | conv | plethysm | zeta
    std::string series = "P";     // genfun: U | S1 | P | P2
    int order = -1;               // genfun: defaults to n * k
    std::string suite = "all";
    int max_k = 3;
    int jobs = 1;
    bool timing = true;           // include runtime_ms
};

// Defaults for precision and truncation from PMLV_PRECISION and PMLV_T.
// Throws DomainError on unparsable values.
void apply_environment(JobConfig& config);

// Executes one job, writing the document to out and diagnostics to err.
// Returns 0 on success, 1 when a verification fails, 2 on precondition errors.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

} // namespace pmlv
