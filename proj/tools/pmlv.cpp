#include <iostream>

#include "CLI11.hpp"

#include "pmlv/cli.hpp"
#include "pmlv/errors.hpp"

int main(int argc, char** argv)
{
    pmlv::JobConfig cfg;
    try {
        pmlv::apply_environment(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return pmlv::kExitUsage;
    }

    CLI::App app{"Partial multiple L-values: oracle sums, closed forms, generating functions"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--precision", cfg.digits, "decimal digits (10-100)");
        sub->add_option("--output", cfg.output, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_flag("--timing,!--no-timing", cfg.timing, "include runtime_ms in JSON output (default on)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate S^(N,M)_k(n_1..n_k) with the DP oracle");
    eval->add_option("--N", cfg.N);
    eval->add_option("--M", cfg.M);
    eval->add_option("--weights", cfg.weights, "n_1 ... n_k")->delimiter(',');
    eval->add_option("--n", cfg.n, "uniform weight when --weights is absent");
    eval->add_option("--k", cfg.k, "depth when --weights is absent");
    eval->add_option("--T", cfg.truncation, "truncation (10 - 10^8)");
    common(eval);

    auto* closed = app.add_subcommand("closed", "closed form of S_k(n) at N = M = 2");
    closed->add_option("--n", cfg.n)->required();
    closed->add_option("--k", cfg.k)->required();
    closed->add_option("--form", cfg.form, "auto, conv, plethysm or zeta")
        ->check(CLI::IsMember({"auto", "conv", "plethysm", "zeta"}));
    closed->add_flag("--normalize", cfg.normalize, "rewrite even zeta values with pi^2");
    common(closed);

    auto* genfun = app.add_subcommand("genfun", "generating-function coefficients");
    genfun->add_option("--series", cfg.series, "U, S1, P or P2")->check(CLI::IsMember({"U", "S1", "P", "P2"}));
    genfun->add_option("--N", cfg.N);
    genfun->add_option("--M", cfg.M);
    genfun->add_option("--n", cfg.n);
    genfun->add_option("--k", cfg.k, "order defaults to n*k");
    genfun->add_option("--order", cfg.order);
    genfun->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "numeric"}));
    common(genfun);

    auto* verify = app.add_subcommand("verify", "run the identity and oracle suites");
    verify->add_option("--suite", cfg.suite);
    verify->add_option("--max-k", cfg.max_k);
    verify->add_option("--T", cfg.truncation);
    verify->add_option("--jobs", cfg.jobs);
    common(verify);

    auto* table = app.add_subcommand("table", "grid of S_k(n) for n <= --n, k <= --k");
    table->add_option("--n", cfg.n, "largest n");
    table->add_option("--k", cfg.k, "largest k");
    table->add_option("--mode", cfg.mode, "numeric adds oracle values")->check(CLI::IsMember({"exact", "numeric"}));
    table->add_option("--T", cfg.truncation);
    common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pmlv::kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "table" && table->count("--output") == 0) {
        cfg.output = "csv";
    }
    return pmlv::run(cfg, std::cout, std::cerr);
}
