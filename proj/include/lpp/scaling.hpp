#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lpp {

struct AssumptionCheck {
    std::string name;
    double margin = 0.0;  // >= 0 means satisfied
    bool ok = true;
};

// Small-delta scaling: s_r = 2 delta, t_r = delta^{3/2}/ln(1/delta)^3,
// r = M = ln(1/delta)/4, with tau defaulting to t_r.
struct ScalingParams {
    double delta = 0.0;
    double s_r = 0.0;
    double t_r = 0.0;
    double r = 0.0;
    double M = 0.0;
    double tau = 0.0;
    std::vector<AssumptionCheck> checks;

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    std::string first_violation() const {
        for (const auto& c : checks)
            if (!c.ok) return c.name;
        return {};
    }
};

// strict: throw on the first violated inequality (message names it).
// relaxed: return the parameters with per-inequality margins for reporting.
ScalingParams scaling_parameters(double delta, double delta0 = 0.05, bool strict = true);

// The N-dependent inequality r <= N^{1/3} / ln N.
AssumptionCheck check_r_bound(const ScalingParams& p, std::int64_t N);

}  // namespace lpp
