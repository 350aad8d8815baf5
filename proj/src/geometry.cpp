#include "lpp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace lpp {

bool precedes(const GeodesicPath& a, const GeodesicPath& b) {
    if (a.sites.empty() || b.sites.empty()) throw std::domain_error("precedes: empty path");
    const std::int64_t lo = std::max(level(a.sites.front()), level(b.sites.front()));
    const std::int64_t hi = std::min(level(a.sites.back()), level(b.sites.back()));
    for (std::int64_t lev = lo; lev <= hi; ++lev) {
        Point pa, pb;
        a.site_at_level(lev, pa);
        b.site_at_level(lev, pb);
        if (!before(pa, pb)) return false;
    }
    return true;
}

CoalescencePoint coalescence_point(const GeodesicPath& a, const GeodesicPath& b) {
    if (a.sites.empty() || b.sites.empty()) throw std::domain_error("coalescence_point: empty path");
    if (a.end() != b.end()) throw std::domain_error("coalescence_point: paths must share the endpoint");
    const std::int64_t lo =
        std::max(level(a.sites[a.bulk_begin()]), level(b.sites[b.bulk_begin()]));
    const std::int64_t hi = level(a.end());

    CoalescencePoint cp;
    std::int64_t lev = hi;
    for (; lev >= lo; --lev) {
        Point pa, pb;
        a.site_at_level(lev, pa);
        b.site_at_level(lev, pb);
        if (pa != pb) break;
        cp.site = pa;
    }
    // Suffix property: below the first divergence the bulk parts must stay
    // disjoint; geodesic uniqueness forbids re-intersection.
    for (; lev >= lo; --lev) {
        Point pa, pb;
        a.site_at_level(lev, pa);
        b.site_at_level(lev, pb);
        if (pa == pb) {
            cp.anomalous_reintersection = true;
            break;
        }
    }
    return cp;
}

bool event_before_horizon(const CoalescencePoint& cp, double tau, std::int64_t N, bool* missing) {
    if (missing) *missing = false;
    if (!cp.site) {
        if (missing) *missing = true;
        return false;
    }
    return static_cast<double>(level(*cp.site)) <= 2.0 * (1.0 - tau) * static_cast<double>(N);
}

bool indicator_exit_window(std::span<const std::optional<std::int64_t>> exits,
                           std::span<const ExitWindow> windows) {
    if (exits.size() != windows.size()) throw std::invalid_argument("indicator_exit_window: size mismatch");
    for (std::size_t i = 0; i < exits.size(); ++i) {
        if (!exits[i]) throw std::domain_error("indicator_exit_window: missing exit point");
        const double z = static_cast<double>(*exits[i]);
        if (z < windows[i].lo || z > windows[i].hi) return false;
    }
    return true;
}

bool indicator_sandwich(const GeodesicPath& lower, const GeodesicPath& middle, const GeodesicPath& upper) {
    if (lower.end() != middle.end() || middle.end() != upper.end()) {
        throw std::domain_error("indicator_sandwich: endpoints differ");
    }
    return precedes(lower, middle) && precedes(middle, upper);
}

namespace {
inline std::uint64_t site_key(Point p) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x1)) << 32) |
           static_cast<std::uint32_t>(p.x2);
}
}  // namespace

bool indicator_crossing(const GeodesicPath& path, std::span<const Point> sites) {
    std::unordered_set<std::uint64_t> keys;
    keys.reserve(sites.size() * 2);
    for (const Point& p : sites) keys.insert(site_key(p));
    for (const Point& p : path.sites) {
        if (keys.count(site_key(p))) return true;
    }
    return false;
}

bool indicator_crossing(const GeodesicPath& path, const Region& segment) {
    const std::vector<Point> sites = region_sites(segment);
    return indicator_crossing(path, std::span<const Point>(sites));
}

std::optional<Point> last_crossing(const GeodesicPath& path, Point corner) {
    std::optional<Point> best;
    for (const Point& p : path.sites) {
        if (p.x1 == corner.x1 || p.x2 == corner.x2) best = p;
    }
    return best;
}

CornerFrame corner_frame(double s, double t, std::int64_t N) {
    const double n23 = std::pow(static_cast<double>(N), 2.0 / 3.0);
    const std::int64_t hw = static_cast<std::int64_t>(std::floor(s * n23 / 2.0));
    const std::int64_t i0 = static_cast<std::int64_t>(std::floor((1.0 - t) * static_cast<double>(N)));
    CornerFrame f;
    f.corner = from_spacetime(i0, 0) - Point{hw, hw};
    const Point h_end = from_spacetime(i0, hw);   // right end of the horizontal arm
    const Point v_end = from_spacetime(i0, -hw);  // top end of the vertical arm
    for (std::int64_t i = 1; i <= hw; ++i) {
        f.h_arm.push_back(h_end - Point{i, 0});
        f.v_arm.push_back(v_end - Point{0, i});
    }
    return f;
}

}  // namespace lpp
