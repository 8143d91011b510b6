#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "taulat/jobs.hpp"

namespace {

using taulat::jobs::JobConfig;
using taulat::jobs::Report;

JobConfig load_config(const std::string& config_path, const std::string& fixture) {
    nlohmann::json j;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config file '" + config_path + "'");
        in >> j;
    } else if (!fixture.empty()) {
        j = nlohmann::json{{"element", {{"fixture", fixture}}}};
    } else {
        throw std::invalid_argument("either --config or --fixture is required");
    }
    return JobConfig::from_json(j);
}

int emit(const Report& report, const std::string& report_path, bool quiet) {
    if (!quiet) {
        for (const auto& rec : report.checks)
            std::cout << (rec.pass ? "PASS " : "FAIL ") << rec.check << " [" << rec.digest
                      << "] residual=" << rec.residual << "\n";
        std::cout << (report.green ? "green" : "red") << " (" << report.checks.size()
                  << " checks)\n";
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << report.to_json().dump(2) << "\n";
    }
    return report.green ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tau-function lattice toolkit"};
    app.require_subcommand(1);

    std::string config_path, fixture, report_path;
    std::uint64_t seed = 0;
    bool have_seed = false;
    std::vector<std::string> suites;
    int steps = -1;
    std::string at_json;
    bool flip_even = false;
    bool quiet = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON job configuration");
        cmd->add_option("--fixture", fixture, "built-in element fixture name");
        cmd->add_option("--report", report_path, "write the JSON report here");
        cmd->add_flag("--quiet", quiet, "suppress per-check output");
    };

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify->add_option("--suite", suites, "suite selection (repeatable)");
    verify->add_option("--seed", seed, "RNG seed for the sweeps")->each([&](const std::string&) {
        have_seed = true;
    });

    CLI::App* propagate = app.add_subcommand("propagate", "propagate a lattice recurrence");
    add_common(propagate);
    propagate->add_option("--steps", steps, "number of levels to propagate");

    CLI::App* tau_eval = app.add_subcommand("tau-eval", "evaluate tau (and lattice values)");
    add_common(tau_eval);
    tau_eval->add_option("--at", at_json, "time vector as a JSON array of rationals");
    tau_eval->add_flag("--flip-even", flip_even, "evaluate at the even-sign-flipped times");

    CLI11_PARSE(app, argc, argv);

    try {
        JobConfig cfg = load_config(config_path, fixture);
        if (verify->parsed()) {
            if (!suites.empty()) cfg.suites = suites;
            if (have_seed) cfg.seed = seed;
            return emit(taulat::jobs::run_verify(cfg), report_path, quiet);
        }
        if (propagate->parsed()) {
            if (steps >= 0) cfg.steps = steps;
            return emit(taulat::jobs::run_propagate(cfg), report_path, quiet);
        }
        // tau-eval
        if (!at_json.empty()) {
            cfg.base_time.clear();
            for (const auto& v : nlohmann::json::parse(at_json))
                cfg.base_time.push_back(v.is_string()
                                            ? taulat::Rational::parse(v.get<std::string>())
                                            : taulat::Rational(v.get<long>()));
        }
        if (flip_even) cfg.flip_even_times = true;
        Report report = taulat::jobs::run_tau_eval(cfg);
        std::cout << report.extra["tau"].get<std::string>() << "\n";
        if (report.extra.contains("lattice_values"))
            for (const auto& v : report.extra["lattice_values"])
                std::cout << v.dump() << "\n";
        if (!report_path.empty()) {
            std::ofstream out(report_path);
            out << report.to_json().dump(2) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
