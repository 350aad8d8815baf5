#pragma once

#include <cstdint>
#include <vector>

#include "lpp/lattice.hpp"

namespace lpp {

// An up-right lattice path.  For stationary models the leading sites along the
// axis (including the base point) carry boundary weights instead of bulk ones;
// for line-to-point paths the single leading site lies on the antidiagonal.
// boundary_prefix counts those leading non-bulk sites.
struct GeodesicPath {
    std::vector<Point> sites;
    std::size_t boundary_prefix = 0;
    double total_weight = 0.0;

    Point start() const { return sites.front(); }
    Point end() const { return sites.back(); }
    // First site that carries a bulk weight.
    std::size_t bulk_begin() const { return boundary_prefix; }

    // Steps as e1/e2 flags (true = e2).
    std::vector<bool> steps() const {
        std::vector<bool> s;
        s.reserve(sites.size() > 0 ? sites.size() - 1 : 0);
        for (std::size_t i = 1; i < sites.size(); ++i) s.push_back(sites[i].x2 > sites[i - 1].x2);
        return s;
    }

    // Site where the path crosses a given antidiagonal level, if any.
    // Up-right paths cross each level in range exactly once.
    bool site_at_level(std::int64_t lev, Point& out) const {
        if (sites.empty() || lev < level(sites.front()) || lev > level(sites.back())) return false;
        out = sites[static_cast<std::size_t>(lev - level(sites.front()))];
        return true;
    }
};

}  // namespace lpp
