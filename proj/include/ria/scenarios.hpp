#pragma once

#include <string>
#include <vector>

#include "ria/config.hpp"
#include "ria/manifest.hpp"
#include "ria/simulate.hpp"

namespace ria {

/// Streams to simulate at one power point, with display metadata.
struct BuiltPoint {
    std::vector<ReceivedModel> models;
    std::vector<std::string> meta;  // Q_or_aWL per model
    double sum_rate_factor = 1.0;   // 3 for the symmetric single-user analysis
    std::vector<std::string> warnings;
};

BuiltPoint build_models(const ExperimentConfig& cfg, double P);

/// Power grid P_L = W^(2L/(1-2eps)) for L = 1..Lmax (clipped to P <= cap);
/// neutralizes the floor in the level selection.
std::vector<double> multilayer_grid(int64_t W, double epsilon, int Lmax, double cap);

/// Full sweep over cfg.P: enumerate + simulate every stream.
SweepResult run_sweep(const ExperimentConfig& cfg, RunManifest* mf, std::string* csv_out);

/// Scenario entry point: writes output CSVs and manifest.json under
/// cfg.out_dir.  Throws ConfigError / std::exception on failure.
RunManifest run_scenario(const ExperimentConfig& cfg);

/// Individual emitters (also used by the `run` dispatcher and tests).
std::string gamma_check_csv(const ExperimentConfig& cfg, RunManifest& mf);
std::string gain_scan_csv(const ExperimentConfig& cfg, RunManifest& mf);
std::string khintchine_csv(const ExperimentConfig& cfg, RunManifest& mf);
std::string standardize_csv(const ExperimentConfig& cfg, RunManifest& mf);
std::string dmin_report_csv(const ExperimentConfig& cfg, RunManifest& mf);

extern const std::vector<std::string> kSweepColumns;
extern const std::vector<std::string> kGainScanColumns;

}  // namespace ria
