#include "lpp/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace lpp {

ScalingParams scaling_parameters(double delta, double delta0, bool strict) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("scaling_parameters: delta must lie in (0,1)");
    ScalingParams p;
    p.delta = delta;
    const double L = std::log(1.0 / delta);
    p.s_r = 2.0 * delta;
    p.t_r = std::pow(delta, 1.5) / (L * L * L);
    p.r = L / 4.0;
    p.M = L / 4.0;
    p.tau = p.t_r;

    auto add = [&](const std::string& name, double margin) {
        p.checks.push_back({name, margin, margin >= 0.0});
    };
    add("delta < delta0", delta0 - delta);
    add("s_r <= min(r, 4)", std::min(p.r, 4.0) - p.s_r);
    add("M <= s_r t_r^{-2/3}/16 - 4 r t_r^{1/3}",
        p.s_r * std::pow(p.t_r, -2.0 / 3.0) / 16.0 - 4.0 * p.r * std::pow(p.t_r, 1.0 / 3.0) - p.M);

    if (strict && !p.all_ok()) {
        throw std::invalid_argument("scaling_parameters: violated \"" + p.first_violation() + "\" at delta=" +
                                    std::to_string(delta));
    }
    return p;
}

AssumptionCheck check_r_bound(const ScalingParams& p, std::int64_t N) {
    const double bound = std::pow(static_cast<double>(N), 1.0 / 3.0) / std::log(static_cast<double>(N));
    return {"r <= N^{1/3}/ln N", bound - p.r, bound - p.r >= 0.0};
}

}  // namespace lpp
