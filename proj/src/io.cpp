#include "lpp/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lpp/format.hpp"

namespace lpp {

std::string trials_csv(const ExperimentConfig& cfg, const PointResult& point) {
    std::string s;
    s += "experiment,N,delta,tau,seed,trial,valid";
    for (const auto& c : point.columns) {
        s += ',';
        s += c.name;
    }
    s += '\n';
    for (std::size_t t = 0; t < point.rows.size(); ++t) {
        s += cfg.experiment;
        s += ',' + std::to_string(cfg.N);
        s += ',' + format_double(point.delta);
        s += ',' + format_double(point.tau);
        s += ',' + std::to_string(cfg.master_seed);
        s += ',' + std::to_string(t);
        s += ',' + std::string(point.valid[t] ? "1" : "0");
        for (double v : point.rows[t]) {
            s += ',';
            s += format_double(v);
        }
        s += '\n';
    }
    return s;
}

ParsedTrials parse_trials_csv(const std::string& content) {
    ParsedTrials out;
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("parse_trials_csv: empty input");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string field;
        while (std::getline(hs, field, ',')) header.push_back(field);
    }
    if (header.size() < 7) throw std::invalid_argument("parse_trials_csv: malformed header");
    out.columns.assign(header.begin() + 7, header.end());
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != header.size()) throw std::invalid_argument("parse_trials_csv: ragged row");
        auto to_d = [](const std::string& f) {
            double v = 0.0;
            const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
            if (res.ec != std::errc{}) throw std::invalid_argument("parse_trials_csv: bad number " + f);
            return v;
        };
        if (first) {
            out.experiment = fields[0];
            out.N = std::stoll(fields[1]);
            out.delta = to_d(fields[2]);
            out.tau = to_d(fields[3]);
            out.master_seed = std::stoull(fields[4]);
            first = false;
        }
        out.trial_index.push_back(std::stoull(fields[5]));
        out.valid.push_back(fields[6] == "1");
        std::vector<double> row;
        for (std::size_t i = 7; i < fields.size(); ++i) row.push_back(to_d(fields[i]));
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string summary_json(const RunOutput& out) {
    nlohmann::json j;
    const ExperimentConfig& c = out.cfg;
    j["config"] = {{"experiment", c.experiment}, {"N", c.N},
                   {"deltas", c.deltas},         {"tau_override", c.tau_override},
                   {"sigma", c.sigma},           {"trials", c.trials},
                   {"master_seed", c.master_seed}, {"workers", c.workers},
                   {"relax_assumptions", c.relax_assumptions}, {"delta0", c.delta0},
                   {"r_depth_tau", c.coalescence.r_depth_tau}, {"exhaustive_r", c.coalescence.exhaustive_r},
                   {"m_grid", c.m_grid},         {"r_grid", c.r_grid},
                   {"eta_grid", c.eta_grid},     {"lambda_grid", c.lambda_grid},
                   {"r0", c.r0},                 {"nu", c.nu},
                   {"xi1", c.xi1},               {"tau_loc", c.tau_loc},
                   {"alpha", c.alpha},           {"beta", c.beta},
                   {"horizon", c.horizon},       {"coupling_r", c.coupling_r}};
    j["points"] = nlohmann::json::array();
    for (const auto& p : out.points) {
        nlohmann::json pj;
        pj["delta"] = p.delta;
        pj["tau"] = p.tau;
        pj["wall_seconds"] = p.wall_seconds;
        pj["assumptions"] = nlohmann::json::array();
        for (const auto& a : p.assumptions) {
            pj["assumptions"].push_back({{"name", a.name}, {"margin", a.margin}, {"ok", a.ok}});
        }
        nlohmann::json ev;
        for (const auto& [name, est] : p.event_estimates()) {
            ev[name] = {{"n", est.n},       {"k", est.k},           {"invalid", est.invalid},
                        {"p_hat", est.p_hat}, {"ci_lo", est.ci.lo}, {"ci_hi", est.ci.hi}};
        }
        pj["events"] = ev;
        j["points"].push_back(pj);
    }
    if (out.fit) {
        j["fit"] = {{"slope", out.fit->slope}, {"stderr", out.fit->stderr_}, {"used", out.fit->used}};
    }
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string default_out_dir() {
    const char* env = std::getenv("LPP_OUT_DIR");
    return env && *env ? std::string(env) : std::string(".");
}

}  // namespace lpp
