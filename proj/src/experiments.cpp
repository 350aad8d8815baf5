#include "lpp/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "lpp/rng.hpp"
#include "lpp/stationary.hpp"

namespace lpp {

std::map<std::string, EstimateRecord> PointResult::event_estimates() const {
    std::map<std::string, EstimateRecord> out;
    std::int64_t n_valid = 0, n_invalid = 0;
    for (bool v : valid) (v ? n_valid : n_invalid)++;
    if (n_valid == 0) throw std::logic_error("event_estimates: zero valid trials");
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (!columns[c].is_event) continue;
        std::int64_t k = 0;
        for (std::size_t t = 0; t < rows.size(); ++t) {
            if (valid[t] && rows[t][c] != 0.0) ++k;
        }
        out[columns[c].name] = estimate(k, n_valid, n_invalid);
    }
    return out;
}

namespace {

const std::set<std::string> kExperiments = {"coalescence", "general-ic", "localization", "exit-tail",
                                            "prop62",      "queue-bounds", "rw-bound"};

bool uses_delta_grid(const std::string& e) {
    return e == "coalescence" || e == "general-ic" || e == "prop62";
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
    if (!kExperiments.count(cfg.experiment)) {
        throw std::invalid_argument("config: unknown experiment \"" + cfg.experiment + "\"");
    }
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("config: workers must be >= 1");
    if (uses_delta_grid(cfg.experiment)) {
        if (cfg.deltas.empty()) throw std::invalid_argument("config: delta grid required");
        if (cfg.N < 8) throw std::invalid_argument("config: N too small");
        for (double d : cfg.deltas) {
            const ScalingParams sp = scaling_parameters(d, cfg.delta0, !cfg.relax_assumptions);
            if (cfg.tau_override > 0.0 && cfg.tau_override > sp.t_r * (1.0 + 1e-12)) {
                throw std::invalid_argument("config: tau exceeds the delta^{3/2}/ln(1/delta)^3 ceiling");
            }
            if (!cfg.relax_assumptions) {
                const AssumptionCheck rc = check_r_bound(sp, cfg.N);
                if (!rc.ok) throw std::invalid_argument("config: violated \"" + rc.name + "\"");
            }
        }
    }
    if (cfg.experiment == "general-ic" && cfg.sigma < 0.0) throw std::invalid_argument("config: sigma must be >= 0");
    if (cfg.experiment == "localization") {
        if (cfg.N < 8) throw std::invalid_argument("config: N too small");
        if (!(cfg.xi1 > 0.0 && cfg.xi1 < 1.0)) throw std::invalid_argument("config: xi1 must lie in (0,1)");
        if (!(cfg.tau_loc > 0.0 && cfg.tau_loc <= 1.0)) throw std::invalid_argument("config: tau_loc must lie in (0,1]");
        if (cfg.m_grid.empty()) throw std::invalid_argument("config: M grid required");
    }
    if (cfg.experiment == "exit-tail") {
        if (cfg.N < 8) throw std::invalid_argument("config: N too small");
        Density check(cfg.nu);
        if (cfg.r_grid.empty()) throw std::invalid_argument("config: r grid required");
    }
    if (cfg.experiment == "prop62" && !(cfg.r0 > 0.0)) throw std::invalid_argument("config: r0 must be positive");
    if (cfg.experiment == "queue-bounds") {
        if (cfg.N < 8) throw std::invalid_argument("config: N too small");
        if (!(cfg.coupling_r > 0.0)) throw std::invalid_argument("config: coupling r must be positive");
        if (cfg.eta_grid.empty()) throw std::invalid_argument("config: eta grid required");
    }
    if (cfg.experiment == "rw-bound") {
        if (!(cfg.beta > 0.0 && cfg.beta < cfg.alpha && cfg.alpha < 1.0)) {
            throw std::invalid_argument("config: need 0 < beta < alpha < 1");
        }
        if (cfg.horizon < 1) throw std::invalid_argument("config: horizon must be >= 1");
        for (double l : cfg.lambda_grid)
            if (!(l >= 0.0)) throw std::invalid_argument("config: lambda must be >= 0");
    }
}

namespace {

PointResult run_point(const ExperimentConfig& cfg, double delta) {
    const auto t0 = std::chrono::steady_clock::now();
    PointResult pr;
    pr.delta = delta;
    pr.tau = 0.0;
    if (uses_delta_grid(cfg.experiment)) {
        const ScalingParams sp = scaling_parameters(delta, cfg.delta0, false);
        pr.tau = cfg.tau_override > 0.0 ? cfg.tau_override : sp.t_r;
        pr.assumptions = sp.checks;
        pr.assumptions.push_back(check_r_bound(sp, cfg.N));
    } else if (cfg.experiment == "localization") {
        pr.tau = cfg.tau_loc;
    }

    const std::int64_t trials = cfg.trials;
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(trials));
    std::vector<char> valid(static_cast<std::size_t>(trials), 1);
    std::vector<ColumnSpec> columns;
    std::mutex columns_mutex;
    std::atomic<std::int64_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cfg.workers));

    auto work = [&](int wi) {
        try {
            while (true) {
                const std::int64_t t = next.fetch_add(1);
                if (t >= trials) break;
                const SeedManifest seed{cfg.master_seed, cfg.experiment, static_cast<std::uint64_t>(t)};
                TrialOutcome out;
                if (cfg.experiment == "coalescence") {
                    out = run_trial_coalescence(cfg.N, delta, cfg.tau_override, seed, cfg.coalescence);
                } else if (cfg.experiment == "general-ic") {
                    out = run_trial_general_ic(cfg.N, delta, cfg.tau_override, cfg.sigma, seed);
                } else if (cfg.experiment == "localization") {
                    out = run_trial_localization(cfg.N, cfg.tau_loc, cfg.xi1, cfg.m_grid, seed);
                } else if (cfg.experiment == "exit-tail") {
                    out = run_trial_exit_tail(cfg.N, cfg.nu, cfg.r_grid, seed);
                } else if (cfg.experiment == "prop62") {
                    out = run_trial_prop62(cfg.N, delta, cfg.r0, seed);
                } else if (cfg.experiment == "queue-bounds") {
                    out = run_trial_queue_bounds(cfg.coupling_r, cfg.N, cfg.eta_grid, seed);
                } else if (cfg.experiment == "rw-bound") {
                    out = run_trial_rw_bound(cfg.alpha, cfg.beta, cfg.lambda_grid, cfg.horizon, seed);
                } else {
                    throw std::logic_error("run_point: unhandled experiment");
                }
                {
                    std::lock_guard<std::mutex> lk(columns_mutex);
                    if (columns.empty()) columns = out.columns;
                }
                rows[static_cast<std::size_t>(t)] = std::move(out.values);
                valid[static_cast<std::size_t>(t)] = out.valid ? 1 : 0;
            }
        } catch (...) {
            errors[static_cast<std::size_t>(wi)] = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    pr.columns = std::move(columns);
    pr.rows = std::move(rows);
    pr.valid.assign(valid.begin(), valid.end());
    pr.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return pr;
}

}  // namespace

RunOutput run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    RunOutput out;
    out.cfg = cfg;
    if (uses_delta_grid(cfg.experiment)) {
        for (double d : cfg.deltas) out.points.push_back(run_point(cfg, d));
    } else {
        out.points.push_back(run_point(cfg, 0.0));
    }

    if (cfg.experiment == "coalescence" && out.points.size() >= 3) {
        std::vector<double> deltas, fails, sds;
        for (const auto& p : out.points) {
            const EstimateRecord est = p.event_estimates().at("thm21");
            deltas.push_back(p.delta);
            fails.push_back(1.0 - est.p_hat);
            sds.push_back(est.ci.half_width() / 1.959963984540054);
        }
        try {
            out.fit = fit_exponent(deltas, fails, sds);
        } catch (const std::invalid_argument&) {
            out.fit.reset();  // degenerate grid; reported as absent
        }
    }
    return out;
}

}  // namespace lpp
