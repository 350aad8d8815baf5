#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpp/scaling.hpp"
#include "lpp/stats.hpp"

namespace lpp {

class RngStream;

// All randomness of a trial flows from this manifest; identical manifests
// reproduce identical outputs regardless of scheduling.
struct SeedManifest {
    std::uint64_t master_seed = 1;
    std::string experiment;
    std::uint64_t trial_index = 0;

    RngStream stream() const;
};

struct ColumnSpec {
    std::string name;
    bool is_event = false;  // 0/1 flag aggregated into an EstimateRecord
};

struct TrialOutcome {
    SeedManifest manifest;
    std::vector<ColumnSpec> columns;
    std::vector<double> values;
    bool valid = true;

    double at(const std::string& name) const;
    bool flag(const std::string& name) const { return at(name) != 0.0; }
};

struct CoalescenceOptions {
    bool r_depth_tau = false;  // R-set depth tau instead of the default 1/4
    bool exhaustive_r = false; // additionally evaluate every start in the R-set
};

TrialOutcome run_trial_coalescence(std::int64_t N, double delta, double tau, const SeedManifest& seed,
                                   const CoalescenceOptions& opt = {});
TrialOutcome run_trial_general_ic(std::int64_t N, double delta, double tau, double sigma,
                                  const SeedManifest& seed);
TrialOutcome run_trial_localization(std::int64_t N, double tau, double xi1, std::span<const double> m_grid,
                                    const SeedManifest& seed);
TrialOutcome run_trial_exit_tail(std::int64_t N, double nu, std::span<const double> r_grid,
                                 const SeedManifest& seed);
TrialOutcome run_trial_prop62(std::int64_t N, double delta, double r0, const SeedManifest& seed);
TrialOutcome run_trial_queue_bounds(double r, std::int64_t n_eff, std::span<const double> eta_grid,
                                    const SeedManifest& seed);
TrialOutcome run_trial_rw_bound(double alpha, double beta, std::span<const double> lambda_grid,
                                std::int64_t horizon, const SeedManifest& seed);

// Monte Carlo check of the random-walk supremum bound (beta/alpha) e^{-(alpha-beta) lambda}.
struct RwBoundReport {
    std::vector<double> lambdas;
    std::vector<EstimateRecord> estimates;
    std::vector<double> bounds;
    bool all_within_3ci = true;
};

RwBoundReport verify_rw_bound(double alpha, double beta, std::span<const double> lambda_grid,
                              std::int64_t horizon, std::int64_t trials, std::uint64_t master_seed,
                              int workers = 2);

struct ExperimentConfig {
    std::string experiment;  // coalescence | general-ic | localization | exit-tail | prop62 | queue-bounds | rw-bound | self-test
    std::int64_t N = 0;
    std::vector<double> deltas;
    double tau_override = -1.0;  // < 0: tau = t_r(delta)
    double sigma = 0.0;
    std::int64_t trials = 0;
    std::uint64_t master_seed = 1;
    int workers = 2;
    std::string out_dir;
    bool relax_assumptions = false;
    double delta0 = 0.05;
    CoalescenceOptions coalescence;
    std::vector<double> m_grid{0.5, 0.75, 1.0, 1.25};
    std::vector<double> r_grid{0.5, 1.0, 1.5, 2.0};
    std::vector<double> eta_grid{0.001, 0.005, 0.01};
    std::vector<double> lambda_grid{2.0, 5.0, 10.0};
    double r0 = 2.0;
    double nu = 0.5;
    double xi1 = 0.5;
    double tau_loc = 0.5;
    double alpha = 0.6;
    double beta = 0.4;
    std::int64_t horizon = 10000;
    double coupling_r = 2.0;
};

// Throws std::invalid_argument naming the failed check.
void validate_config(const ExperimentConfig& cfg);

struct PointResult {
    double delta = 0.0;  // NaN-free: 0 when not applicable
    double tau = 0.0;
    std::vector<ColumnSpec> columns;
    std::vector<std::vector<double>> rows;  // per trial, parallel to columns
    std::vector<bool> valid;
    std::vector<AssumptionCheck> assumptions;
    double wall_seconds = 0.0;

    std::map<std::string, EstimateRecord> event_estimates() const;
};

struct RunOutput {
    ExperimentConfig cfg;
    std::vector<PointResult> points;
    std::optional<ExponentFit> fit;  // over the delta grid, when >= 3 usable points
};

RunOutput run_experiment(const ExperimentConfig& cfg);

}  // namespace lpp
