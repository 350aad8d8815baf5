#pragma once

#include <string>

#include "lpp/experiments.hpp"

namespace lpp {

// Per-trial CSV: fixed prefix experiment,N,delta,tau,seed,trial,valid then the
// point's columns.  Doubles use shortest round-trip formatting so identical
// runs are byte-identical.
std::string trials_csv(const ExperimentConfig& cfg, const PointResult& point);

// Summary JSON: config echo, per-event estimates, assumption margins, fit.
std::string summary_json(const RunOutput& out);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

struct ParsedTrials {
    std::string experiment;
    std::int64_t N = 0;
    double delta = 0.0;
    double tau = 0.0;
    std::uint64_t master_seed = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<bool> valid;
    std::vector<std::uint64_t> trial_index;
};

ParsedTrials parse_trials_csv(const std::string& content);

// Default output directory: $LPP_OUT_DIR or "." when unset.
std::string default_out_dir();

}  // namespace lpp
