#pragma once

#include <cstdint>
#include <vector>

#include "lpp/lattice.hpp"

namespace lpp {

// Space-time regions in the (i,j) frame (site = i e4 + j e3, integer i, j).
struct Region {
    enum class Kind {
        cylinder,  // (1-tau)N <= i <= N, |j| <= sigma N^{2/3} / 2
        rset,      // 0 <= i <= tau N, |j| <= sigma N^{2/3} / 2, |j| < i
        segment,   // i = floor((1-tau)N), |j| <= sigma N^{2/3} / 2
        horizon,   // level 2 tau N; unbounded, handled through its level
    };

    Kind kind;
    double sigma = 0.0;
    double tau = 0.0;
    std::int64_t N = 0;
};

inline Region cylinder_region(double sigma, double tau, std::int64_t N) { return {Region::Kind::cylinder, sigma, tau, N}; }
inline Region rset_region(double sigma, double tau, std::int64_t N) { return {Region::Kind::rset, sigma, tau, N}; }
inline Region segment_region(double sigma, double tau, std::int64_t N) { return {Region::Kind::segment, sigma, tau, N}; }

// Half-width floor(sigma N^{2/3} / 2) in e3 units.
std::int64_t region_half_width(const Region& r);

// Exact enumeration of the region's sites.  Empty regions return an empty
// list and set *empty_warn.  The horizon kind is unbounded and throws.
std::vector<Point> region_sites(const Region& r, bool* empty_warn = nullptr);

// Antidiagonal level 2 tau N of the horizon L_tau.
inline double horizon_level(double tau, std::int64_t N) { return 2.0 * tau * static_cast<double>(N); }

// Down-right extreme corners of the rset: upper-left and lower-right ends of
// its far edge.  Geodesics from these two starts are the reduced stand-ins
// for the whole set in the coalescence experiments.
std::pair<Point, Point> rset_extreme_corners(const Region& r);

}  // namespace lpp
