#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpp/experiments.hpp"
#include "lpp/format.hpp"
#include "lpp/io.hpp"
#include "lpp/self_test.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;       // invalid config / assumption violation
constexpr int kExitStatFailed = 3;  // a statistical check did not hold

std::string point_csv_name(const lpp::ExperimentConfig& cfg, const lpp::PointResult& p) {
    std::string name = "trials_" + cfg.experiment;
    if (p.delta > 0.0) name += "_delta" + lpp::format_double(p.delta);
    return name + ".csv";
}

// Built-in per-experiment checks; failures flip the exit code to 3.
bool run_checks(const lpp::RunOutput& out, std::ostream& os) {
    const auto& cfg = out.cfg;
    bool ok = true;
    auto fail = [&](const std::string& msg) {
        os << "CHECK FAIL: " << msg << "\n";
        ok = false;
    };
    if (cfg.experiment == "exit-tail") {
        const auto ev = out.points[0].event_estimates();
        double prev = 2.0;
        for (double r : cfg.r_grid) {
            const double p = ev.at("tail_r" + lpp::format_double(r)).p_hat;
            if (p >= prev) fail("exit tail not strictly decreasing at r=" + lpp::format_double(r));
            prev = p;
        }
    } else if (cfg.experiment == "localization") {
        const auto ev = out.points[0].event_estimates();
        double prev = 2.0;
        for (double m : cfg.m_grid) {
            const double pe = ev.at("exists_k_M" + lpp::format_double(m)).p_hat;
            const double pa = ev.at("all_k_M" + lpp::format_double(m)).p_hat;
            if (pe >= prev) fail("exists-k tail not strictly decreasing at M=" + lpp::format_double(m));
            if (pa > pe) fail("all-k estimate exceeds exists-k at M=" + lpp::format_double(m));
            prev = pe;
        }
    } else if (cfg.experiment == "rw-bound") {
        const auto ev = out.points[0].event_estimates();
        for (double l : cfg.lambda_grid) {
            const auto est = ev.at("sup_gt_lambda" + lpp::format_double(l));
            const double bound = (cfg.beta / cfg.alpha) * std::exp(-(cfg.alpha - cfg.beta) * l);
            if (est.p_hat > bound + 3.0 * est.ci.half_width()) {
                fail("sup bound exceeded at lambda=" + lpp::format_double(l));
            }
        }
    } else if (cfg.experiment == "queue-bounds") {
        const auto ev = out.points[0].event_estimates();
        for (double eta : cfg.eta_grid) {
            const auto est = ev.at("agree_eta" + lpp::format_double(eta));
            const double bound = 1.0 - 62.0 * std::sqrt(eta);
            if (est.p_hat < bound - 3.0 * est.ci.half_width()) {
                fail("prefix-agreement estimate below bound at eta=" + lpp::format_double(eta));
            }
        }
    } else if (cfg.experiment == "coalescence") {
        for (const auto& p : out.points) {
            std::size_t c21 = 0, c25 = 0;
            for (std::size_t i = 0; i < p.columns.size(); ++i) {
                if (p.columns[i].name == "thm21") c21 = i;
                if (p.columns[i].name == "thm25") c25 = i;
            }
            for (const auto& row : p.rows) {
                if (row[c21] != 0.0 && row[c25] == 0.0) {
                    fail("event nesting violated at delta=" + lpp::format_double(p.delta));
                    break;
                }
            }
        }
    }
    return ok;
}

int cmd_run(lpp::ExperimentConfig cfg) {
    if (cfg.experiment == "self-test") {
        return lpp::run_self_test(std::cout) ? kExitOk : kExitStatFailed;
    }
    lpp::RunOutput out;
    try {
        lpp::validate_config(cfg);
        out = lpp::run_experiment(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config rejected: " << e.what() << "\n";
        return kExitUsage;
    }
    std::filesystem::create_directories(cfg.out_dir);
    for (const auto& p : out.points) {
        const std::string path = cfg.out_dir + "/" + point_csv_name(cfg, p);
        lpp::write_text_file(path, lpp::trials_csv(cfg, p));
        std::cout << "wrote " << path << " (" << p.rows.size() << " trials, " << p.wall_seconds << "s)\n";
        for (const auto& [name, est] : p.event_estimates()) {
            std::cout << "  " << name << ": p_hat=" << est.p_hat << " ci=[" << est.ci.lo << "," << est.ci.hi
                      << "] n=" << est.n << " invalid=" << est.invalid << "\n";
        }
        for (const auto& a : p.assumptions) {
            if (!a.ok) std::cout << "  assumption violated: " << a.name << " (margin " << a.margin << ")\n";
        }
    }
    if (out.fit) {
        std::cout << "fit: slope=" << out.fit->slope << " stderr=" << out.fit->stderr_ << "\n";
    }
    const std::string spath = cfg.out_dir + "/summary_" + cfg.experiment + ".json";
    lpp::write_text_file(spath, lpp::summary_json(out));
    std::cout << "wrote " << spath << "\n";
    return run_checks(out, std::cerr) ? kExitOk : kExitStatFailed;
}

int cmd_summarize(const std::vector<std::string>& files, const std::string& event) {
    std::string experiment;
    std::int64_t N = -1;
    std::vector<double> deltas, fails, sds;
    try {
        for (const auto& f : files) {
            const nlohmann::json j = nlohmann::json::parse(lpp::read_text_file(f));
            const std::string exp = j["config"]["experiment"];
            const std::int64_t n = j["config"]["N"];
            if (experiment.empty()) {
                experiment = exp;
                N = n;
            } else if (exp != experiment || n != N) {
                std::cerr << "refusing to merge: " << f << " has experiment/N " << exp << "/" << n
                          << " but expected " << experiment << "/" << N << "\n";
                return kExitUsage;
            }
            for (const auto& p : j["points"]) {
                if (!p["events"].contains(event)) {
                    std::cerr << "no event \"" << event << "\" in " << f << "\n";
                    return kExitUsage;
                }
                const auto& e = p["events"][event];
                const double phat = e["p_hat"];
                const double half = (double(e["ci_hi"]) - double(e["ci_lo"])) / 2.0;
                deltas.push_back(p["delta"]);
                fails.push_back(1.0 - phat);
                sds.push_back(half / 1.959963984540054);
                std::cout << "delta=" << double(p["delta"]) << " p_hat=" << phat << " fail=" << 1.0 - phat
                          << " n=" << std::int64_t(e["n"]) << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "summarize failed: " << e.what() << "\n";
        return kExitUsage;
    }
    if (deltas.size() >= 3) {
        try {
            const lpp::ExponentFit fit = lpp::fit_exponent(deltas, fails, sds);
            std::cout << "exponent fit: slope=" << fit.slope << " stderr=" << fit.stderr_
                      << " points=" << fit.used << "\n";
        } catch (const std::invalid_argument& e) {
            std::cout << "exponent fit unavailable: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponential last-passage percolation simulator and experiment driver"};
    app.require_subcommand(1);

    lpp::ExperimentConfig cfg;
    cfg.out_dir = lpp::default_out_dir();
    cfg.trials = 100;
    cfg.N = 200;
    cfg.deltas = {0.1};

    CLI::App* run = app.add_subcommand("run", "run an experiment");
    run->set_config("--config", "", "config file (ini format, flags override)");
    run->add_option("-e,--experiment", cfg.experiment,
                    "coalescence | general-ic | localization | exit-tail | prop62 | queue-bounds | rw-bound | self-test")
        ->required();
    run->add_option("-N,--size", cfg.N, "lattice scale N");
    run->add_option("-d,--delta", cfg.deltas, "delta grid");
    run->add_option("--tau", cfg.tau_override, "horizon depth override (default delta^{3/2}/ln(1/delta)^3)");
    run->add_option("--sigma", cfg.sigma, "initial-condition interpolation parameter");
    run->add_option("-n,--trials", cfg.trials, "trials per grid point");
    run->add_option("-s,--seed", cfg.master_seed, "master seed");
    run->add_option("-w,--workers", cfg.workers, "worker threads");
    run->add_option("-o,--out", cfg.out_dir, "output directory (default $LPP_OUT_DIR or .)");
    run->add_flag("--relax-assumptions", cfg.relax_assumptions,
                  "record scaling-assumption violations instead of rejecting");
    run->add_option("--delta0", cfg.delta0, "strict upper gate for delta");
    run->add_flag("--r-depth-tau", cfg.coalescence.r_depth_tau, "use R-set depth tau instead of 1/4");
    run->add_flag("--exhaustive-r", cfg.coalescence.exhaustive_r,
                  "also evaluate every start in the R-set (small N only)");
    run->add_option("--m-grid", cfg.m_grid, "localization M grid");
    run->add_option("--r-grid", cfg.r_grid, "exit-tail r grid");
    run->add_option("--eta-grid", cfg.eta_grid, "queue-bounds eta grid");
    run->add_option("--lambda-grid", cfg.lambda_grid, "rw-bound lambda grid");
    run->add_option("--r0", cfg.r0, "prop62 interval parameter");
    run->add_option("--nu", cfg.nu, "exit-tail density");
    run->add_option("--xi1", cfg.xi1, "localization direction component");
    run->add_option("--tau-loc", cfg.tau_loc, "localization column-range depth");
    run->add_option("--alpha", cfg.alpha, "rw-bound service rate");
    run->add_option("--beta", cfg.beta, "rw-bound arrival rate");
    run->add_option("--horizon", cfg.horizon, "rw-bound walk length");
    run->add_option("--coupling-r", cfg.coupling_r, "queue-bounds density shift r");

    CLI::App* sum = app.add_subcommand("summarize", "merge summary files and fit the exponent");
    std::vector<std::string> files;
    std::string event = "thm21";
    sum->add_option("files", files, "summary JSON files")->required()->expected(-1);
    sum->add_option("--event", event, "event name to aggregate (default thm21)");

    CLI::App* st = app.add_subcommand("self-test", "run the deterministic oracle suite");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(cfg);
    if (sum->parsed()) return cmd_summarize(files, event);
    if (st->parsed()) return lpp::run_self_test(std::cout) ? kExitOk : kExitStatFailed;
    return kExitUsage;
}
