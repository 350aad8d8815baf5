#include "lpp/deviation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpp {

DeviationProfile deviation_profile(const GeodesicPath& path, double xi1, double xi2) {
    if (path.sites.empty()) throw std::domain_error("deviation_profile: empty path");
    if (!(xi1 > 0.0)) throw std::invalid_argument("deviation_profile: xi1 must be positive");
    const double ratio = xi2 / xi1;
    DeviationProfile prof;
    prof.col_begin = path.sites.front().x1;
    const std::int64_t ncol = path.sites.back().x1 - prof.col_begin + 1;
    prof.upper.assign(static_cast<std::size_t>(ncol), 0);
    prof.lower.assign(static_cast<std::size_t>(ncol), 0);
    prof.dev.assign(static_cast<std::size_t>(ncol), 0.0);

    // One pass; the path visits each column as a contiguous vertical run.
    std::size_t idx = 0;
    bool fresh = true;
    std::int64_t cur = prof.col_begin;
    for (const Point& p : path.sites) {
        if (p.x1 != cur) {
            cur = p.x1;
            ++idx;
            fresh = true;
        }
        if (fresh) {
            prof.upper[idx] = prof.lower[idx] = p.x2;
            fresh = false;
        } else {
            prof.upper[idx] = std::max(prof.upper[idx], p.x2);
            prof.lower[idx] = std::min(prof.lower[idx], p.x2);
        }
    }
    for (std::size_t i = 0; i < prof.dev.size(); ++i) {
        const double target = ratio * static_cast<double>(prof.col_begin + static_cast<std::int64_t>(i));
        prof.dev[i] = std::max(std::abs(static_cast<double>(prof.upper[i]) - target),
                               std::abs(static_cast<double>(prof.lower[i]) - target));
    }
    return prof;
}

}  // namespace lpp
