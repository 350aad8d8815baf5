#pragma once

#include <optional>
#include <span>

#include "lpp/path.hpp"
#include "lpp/regions.hpp"

namespace lpp {

// Path order: a precedes b when, on every antidiagonal both cross, a's site
// is weakly up-left of b's.  Up-right paths cross each level exactly once, so
// this per-level comparison realizes the down-right set order; no common
// levels means vacuously true.
bool precedes(const GeodesicPath& a, const GeodesicPath& b);

// Lattice-minimal point after which two paths to a common endpoint coincide.
// Boundary portions (axis runs, line start sites) are excluded.  For
// geodesics the intersection is a suffix; any re-intersection below the
// suffix is reported instead of guessed around.
struct CoalescencePoint {
    std::optional<Point> site;
    bool anomalous_reintersection = false;
};

CoalescencePoint coalescence_point(const GeodesicPath& a, const GeodesicPath& b);

// True iff the coalescence point lies at or below the horizon L_{1-tau},
// i.e. level(site) <= 2(1-tau)N.  An absent site yields false and sets the flag.
bool event_before_horizon(const CoalescencePoint& cp, double tau, std::int64_t N, bool* missing = nullptr);

// Closed exit-point windows, one per model; infinities allowed.
struct ExitWindow {
    double lo;
    double hi;
};

bool indicator_exit_window(std::span<const std::optional<std::int64_t>> exits,
                           std::span<const ExitWindow> windows);

// lower <= middle <= upper in the path order; all must share the endpoint.
bool indicator_sandwich(const GeodesicPath& lower, const GeodesicPath& middle, const GeodesicPath& upper);

// True iff the path meets the site set.
bool indicator_crossing(const GeodesicPath& path, std::span<const Point> sites);
bool indicator_crossing(const GeodesicPath& path, const Region& segment);

// Last path site on either of the lines x1 = corner.x1, x2 = corner.x2.
std::optional<Point> last_crossing(const GeodesicPath& path, Point corner);

// The corner sets around v^c used by the crossing-event equivalence: the
// horizontal arm ending at (1-t)N e4 + hw e3 and the vertical arm ending at
// (1-t)N e4 - hw e3, each of length hw, plus the corner point itself.
struct CornerFrame {
    std::vector<Point> h_arm;
    std::vector<Point> v_arm;
    Point corner;
};

CornerFrame corner_frame(double s, double t, std::int64_t N);

}  // namespace lpp
