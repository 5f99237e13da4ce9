// Command-line front end for the matrix-model correlator library.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mmc/cli.hpp"

namespace {

mmc::cli::Engine parse_engine(const std::string& s) {
    if (s == "wick") return mmc::cli::Engine::wick;
    if (s == "char") return mmc::cli::Engine::character;
    if (s == "kp") return mmc::cli::Engine::kp;
    if (s == "all" || s == "both") return mmc::cli::Engine::all;
    throw CLI::ValidationError("--engine", "expected wick, char, kp, or all");
}

mmc::cli::Format parse_format(const std::string& s) {
    if (s == "table") return mmc::cli::Format::table;
    if (s == "json") return mmc::cli::Format::json;
    if (s == "csv") return mmc::cli::Format::csv;
    throw CLI::ValidationError("--format", "expected table, json, or csv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact correlators of the Hermitian one-matrix model"};
    app.require_subcommand(1);

    mmc::cli::RunConfig cfg;
    std::string engine = "all";
    std::string format = "table";
    std::string basis = "power";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: table, json, or csv");
        sub->add_option("--threads", cfg.threads, "Worker thread cap");
    };

    auto* correlator = app.add_subcommand("correlator", "Expectation value of a trace product");
    correlator->add_option("--lambda", cfg.lambda, "Partition, e.g. 4,2")->required();
    correlator->add_option("--engine", engine, "Computation route: wick, char, or all");
    correlator->add_flag("--thooft", cfg.thooft, "Substitute N = t/g_s");
    add_common(correlator);

    auto* zfunction = app.add_subcommand("zfunction", "Partition function coefficients");
    zfunction->add_option("--degree", cfg.degree, "Maximum coupling weight")->required();
    zfunction->add_option("--basis", basis, "Coupling basis: power or schur");
    zfunction->add_flag("--thooft", cfg.thooft, "Substitute N = t/g_s");
    add_common(zfunction);

    auto* free_energy = app.add_subcommand("free-energy", "Connected coupling coefficients");
    free_energy->add_option("--degree", cfg.degree, "Maximum coupling weight")->required();
    free_energy->add_flag("--thooft", cfg.thooft, "Substitute N = t/g_s");
    add_common(free_energy);

    auto* npoint = app.add_subcommand("npoint", "Connected n-point resolvent series");
    npoint->add_option("--n", cfg.n, "Number of variables")->required();
    npoint->add_option("--cap", cfg.cap, "Total weight cap (default depends on n)");
    add_common(npoint);

    auto* hz = app.add_subcommand("hz", "One-point recurrence tables");
    std::vector<int> hz_bounds;
    hz->add_option("--table", hz_bounds, "Bounds: print c(n,k) for n <= N_MAX, k <= K_MAX")
        ->expected(2);
    hz->add_option("--n-max", cfg.n_max, "Row bound (alternative to --table)");
    hz->add_option("--k-max", cfg.k_max, "Column bound (alternative to --table)");
    add_common(hz);

    auto* verify = app.add_subcommand("verify", "Cross-checks between independent routes");
    verify->add_option("--suite", cfg.suite, "hz, engines, schur, kp, evenness, or all");
    verify->add_option("--n-max", cfg.n_max, "Sweep depth");
    add_common(verify);

    auto* census = app.add_subcommand("census", "Pairing census of a trace product");
    census->add_option("--lambda", cfg.lambda, "Partition, e.g. 6")->required();
    add_common(census);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.engine = parse_engine(engine);
        cfg.format = parse_format(format);
        if (basis == "power")
            cfg.basis = mmc::correlators::Basis::power;
        else if (basis == "schur")
            cfg.basis = mmc::correlators::Basis::schur;
        else
            throw CLI::ValidationError("--basis", "expected power or schur");
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }

    for (auto* sub : {correlator, zfunction, free_energy, npoint, hz, verify, census})
        if (sub->parsed()) cfg.command = sub->get_name();
    if (hz_bounds.size() == 2) {
        cfg.n_max = hz_bounds[0];
        cfg.k_max = hz_bounds[1];
    }

    return mmc::cli::run(cfg, std::cout, std::cerr);
}
