// Command-line front end: scenario runs, sweeps, scans and reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "ria/errors.hpp"
#include "ria/scenarios.hpp"

namespace {

struct GlobalFlags {
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> workers;
    std::optional<long> precision;
};

void apply_overrides(ria::ExperimentConfig& cfg, const GlobalFlags& g) {
    if (g.seed) {
        cfg.seed = *g.seed;
        cfg.extra["seed"] = *g.seed;
    }
    if (g.out) cfg.out_dir = *g.out;
    if (g.workers) {
        cfg.workers = *g.workers;
        if (cfg.workers < 1) throw ria::ConfigError("--workers must be >= 1");
    }
}

void add_common(CLI::App* sub, GlobalFlags& g) {
    sub->add_option("--config", g.config_path, "Path to the experiment config (JSON)")->required();
    sub->add_option("--seed", g.seed, "Override the config seed");
    sub->add_option("--out", g.out, "Override the output directory");
    sub->add_option("--workers", g.workers, "Worker threads (results are worker-count invariant)");
    sub->add_option("--precision", g.precision, "Working precision in bits (>= 64)");
}

int fail(int code, const std::string& kind, const std::string& message) {
    nlohmann::json err{{"error", message}, {"kind", kind}};
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"real-interference-alignment simulation lab"};
    app.require_subcommand(1);

    GlobalFlags g;
    auto* run = app.add_subcommand("run", "Run the scenario named in the config");
    auto* sweep = app.add_subcommand("sweep", "Run a power sweep scenario");
    auto* gain_scan = app.add_subcommand("gain-scan", "Theory DOF across a gain set");
    auto* gamma_check = app.add_subcommand("gamma-check", "Property Gamma across rational-gain selections");
    auto* dmin = app.add_subcommand("dmin", "Minimum-distance bound report");
    auto* khintchine = app.add_subcommand("khintchine", "Khintchine-Groshev constant estimates");
    for (auto* sub : {run, sweep, gain_scan, gamma_check, dmin, khintchine}) add_common(sub, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (const char* env = std::getenv("RIA_PRECISION_BITS")) {
        try {
            ria::set_default_precision(std::strtol(env, nullptr, 10));
        } catch (const std::exception& e) {
            return fail(2, "config", std::string("RIA_PRECISION_BITS: ") + e.what());
        }
    }
    if (g.precision) {
        try {
            ria::set_default_precision(*g.precision);
        } catch (const std::exception& e) {
            return fail(2, "config", std::string("--precision: ") + e.what());
        }
    }

    try {
        ria::ExperimentConfig cfg = ria::load_config(g.config_path);
        apply_overrides(cfg, g);

        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "gain-scan" && cfg.scenario != "gain-scan")
            throw ria::ConfigError("gain-scan subcommand needs scenario 'gain-scan'");
        if (sub == "gamma-check" && cfg.scenario != "gamma-check")
            throw ria::ConfigError("gamma-check subcommand needs scenario 'gamma-check'");
        if (sub == "khintchine" && cfg.scenario != "khintchine")
            throw ria::ConfigError("khintchine subcommand needs scenario 'khintchine'");

        if (sub == "dmin") {
            ria::RunManifest mf;
            mf.config_digest = cfg.digest();
            mf.seed = cfg.seed;
            mf.tool_version = ria::kToolVersion;
            mf.started = ria::timestamp_utc();
            std::string csv = ria::dmin_report_csv(cfg, mf);
            ria::write_output(mf, cfg.out_dir, "dmin.csv", csv);
            mf.finished = ria::timestamp_utc();
            ria::write_output(mf, cfg.out_dir, "manifest.json", mf.to_json());
            std::cout << csv;
            return 0;
        }

        ria::RunManifest mf = ria::run_scenario(cfg);
        std::cout << "wrote " << mf.outputs.size() << " outputs to " << cfg.out_dir << "\n";
        for (const auto& w : mf.warnings) std::cerr << "warning: " << w << "\n";
        return 0;
    } catch (const ria::ConfigError& e) {
        return fail(2, "config", e.what());
    } catch (const std::exception& e) {
        return fail(1, "runtime", e.what());
    }
}
