#include "lpp/regions.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lpp {

std::int64_t region_half_width(const Region& r) {
    return static_cast<std::int64_t>(std::floor(r.sigma * std::pow(static_cast<double>(r.N), 2.0 / 3.0) / 2.0));
}

std::vector<Point> region_sites(const Region& r, bool* empty_warn) {
    if (empty_warn) *empty_warn = false;
    std::vector<Point> sites;
    const std::int64_t hw = region_half_width(r);
    switch (r.kind) {
        case Region::Kind::cylinder: {
            const std::int64_t ilo = static_cast<std::int64_t>(std::ceil((1.0 - r.tau) * static_cast<double>(r.N)));
            for (std::int64_t i = ilo; i <= r.N; ++i)
                for (std::int64_t j = -hw; j <= hw; ++j) sites.push_back(from_spacetime(i, j));
            break;
        }
        case Region::Kind::rset: {
            const std::int64_t ihi = static_cast<std::int64_t>(std::floor(r.tau * static_cast<double>(r.N)));
            for (std::int64_t i = 0; i <= ihi; ++i)
                for (std::int64_t j = -hw; j <= hw; ++j)
                    if (std::llabs(j) < i) sites.push_back(from_spacetime(i, j));
            break;
        }
        case Region::Kind::segment: {
            const std::int64_t i0 = static_cast<std::int64_t>(std::floor((1.0 - r.tau) * static_cast<double>(r.N)));
            for (std::int64_t j = -hw; j <= hw; ++j) sites.push_back(from_spacetime(i0, j));
            break;
        }
        case Region::Kind::horizon:
            throw std::invalid_argument("region_sites: the horizon is unbounded; use horizon_level");
    }
    if (sites.empty() && empty_warn) *empty_warn = true;
    return sites;
}

std::pair<Point, Point> rset_extreme_corners(const Region& r) {
    if (r.kind != Region::Kind::rset) throw std::invalid_argument("rset_extreme_corners: rset region required");
    const std::int64_t hw = region_half_width(r);
    const std::int64_t ihi = static_cast<std::int64_t>(std::floor(r.tau * static_cast<double>(r.N)));
    if (ihi < 1) throw std::invalid_argument("rset_extreme_corners: empty rset");
    const std::int64_t j = std::min(hw, ihi - 1);  // honor |j| < i
    return {from_spacetime(ihi, -j), from_spacetime(ihi, j)};
}

}  // namespace lpp
