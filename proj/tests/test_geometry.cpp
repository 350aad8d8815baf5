#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lpp/geometry.hpp"
#include "lpp/oracles.hpp"
#include "lpp/regions.hpp"
#include "lpp/rng.hpp"
#include "lpp/stationary.hpp"

using namespace lpp;

namespace {
GeodesicPath make_path(std::vector<Point> sites, std::size_t prefix = 0) {
    GeodesicPath p;
    p.sites = std::move(sites);
    p.boundary_prefix = prefix;
    return p;
}
}  // namespace

TEST_CASE("region enumeration") {
    // Degenerate cylinder collapses to the single site N e4.
    const std::vector<Point> single = region_sites(cylinder_region(1e-9, 1e-9, 50));
    CHECK(single == std::vector<Point>{Point{50, 50}});

    // Product-form cardinality, checked independently of the enumeration.
    const RngStream s = RngStream(1).derive("regions");
    for (std::uint64_t c = 0; c < 50; ++c) {
        const std::int64_t N = 40 + static_cast<std::int64_t>(s.bits(3 * c) % 600);
        const double sigma = 0.05 + 0.8 * s.uniform(3 * c + 1);
        const double tau = 0.05 + 0.4 * s.uniform(3 * c + 2);
        const Region r = cylinder_region(sigma, tau, N);
        const std::int64_t hw =
            static_cast<std::int64_t>(std::floor(sigma * std::pow(double(N), 2.0 / 3.0) / 2.0));
        const std::int64_t ilo = static_cast<std::int64_t>(std::ceil((1.0 - tau) * double(N)));
        const std::int64_t expected = (N - ilo + 1) * (2 * hw + 1);
        REQUIRE(static_cast<std::int64_t>(region_sites(r).size()) == expected);
    }

    // The r-set honors |j| < i strictly.
    const std::vector<Point> rs = region_sites(rset_region(2.0, 0.25, 20));
    for (const Point& p : rs) {
        const std::int64_t i = (p.x1 + p.x2) / 2, j = (p.x1 - p.x2) / 2;
        REQUIRE(std::llabs(j) < i);
    }
    CHECK(std::find(rs.begin(), rs.end(), from_spacetime(2, 2)) == rs.end());
    CHECK(std::find(rs.begin(), rs.end(), from_spacetime(3, 2)) != rs.end());

    bool warn = false;
    CHECK(region_sites(rset_region(0.5, 0.001, 20), &warn).empty());
    CHECK(warn);
    CHECK_THROWS_AS(region_sites(Region{Region::Kind::horizon, 0, 0.5, 20}), std::invalid_argument);

    auto [cl, cr] = rset_extreme_corners(rset_region(2.0, 0.25, 40));
    CHECK(before(cl, cr));
    CHECK(level(cl) == level(cr));
}

TEST_CASE("path order: reflexive, directional, crossing") {
    const GeodesicPath upper = make_path({{0, 0}, {0, 1}, {1, 1}});
    const GeodesicPath lower = make_path({{0, 0}, {1, 0}, {1, 1}});
    CHECK(precedes(upper, upper));
    CHECK(precedes(upper, lower));
    CHECK_FALSE(precedes(lower, upper));

    const GeodesicPath a = make_path({{0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const GeodesicPath b = make_path({{2, 0}, {2, 1}, {3, 1}, {3, 2}});
    CHECK(precedes(a, b));  // vacuous: no common level
    const GeodesicPath cross1 = make_path({{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}});
    const GeodesicPath cross2 = make_path({{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}});
    CHECK_FALSE(precedes(cross1, cross2));
    CHECK_FALSE(precedes(cross2, cross1));
}

TEST_CASE("geodesics to a common endpoint are consistently ordered") {
    for (std::uint64_t t = 0; t < 30; ++t) {
        const RngStream s = RngStream(2).derive("order").derive(t);
        const Point x{40, 40};
        const WeightField f(s, Rect{{0, 0}, x});
        const FieldBlock block(f, f.region());
        const Point w{3, 9};
        const Point y{9, 3};  // w before y in the down-right order
        const GeodesicPath pw = backtrack_geodesic(passage_time(block, w, x), x);
        const GeodesicPath py = backtrack_geodesic(passage_time(block, y, x), x);
        REQUIRE(precedes(pw, py));
    }
}

TEST_CASE("coalescence point: hand cases and scan oracle") {
    const GeodesicPath p1 = make_path({{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(coalescence_point(p1, p1).site == Point{0, 0});

    const GeodesicPath p2 = make_path({{1, 0}, {1, 1}, {1, 2}});
    const GeodesicPath p3 = make_path({{0, 1}, {0, 2}, {1, 2}});
    CHECK(coalescence_point(p2, p3).site == Point{1, 2});

    const GeodesicPath other = make_path({{0, 0}, {1, 0}, {1, 1}});
    CHECK_THROWS_AS(coalescence_point(p1, other), std::domain_error);

    for (std::uint64_t t = 0; t < 20; ++t) {
        const RngStream s = RngStream(3).derive("cp").derive(t);
        const Point x{50, 50};
        const WeightField f(s, Rect{{0, 0}, x});
        const FieldBlock block(f, f.region());
        const GeodesicPath a = backtrack_geodesic(passage_time(block, Point{0, 6}, x), x);
        const GeodesicPath b = backtrack_geodesic(passage_time(block, Point{6, 0}, x), x);
        const CoalescencePoint cp = coalescence_point(a, b);
        REQUIRE_FALSE(cp.anomalous_reintersection);
        REQUIRE(cp.site.has_value());
        // Lattice-minimal common site from the full intersection scan.
        const std::vector<Point> common = path_intersection(a, b);
        Point lo = common.front();
        for (const Point& q : common)
            if (leq(q, lo)) lo = q;
        REQUIRE(*cp.site == lo);
    }
}

TEST_CASE("horizon event") {
    CoalescencePoint cp;
    cp.site = Point{0, 0};
    CHECK(event_before_horizon(cp, 0.9, 100));
    cp.site = Point{100, 100};
    CHECK_FALSE(event_before_horizon(cp, 0.1, 100));
    cp.site = Point{3, 3};  // level 6 == 2 (1 - 0.25) 4
    CHECK(event_before_horizon(cp, 0.25, 4));
    bool missing = false;
    cp.site.reset();
    CHECK_FALSE(event_before_horizon(cp, 0.5, 100, &missing));
    CHECK(missing);
}

TEST_CASE("exit windows") {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::optional<std::int64_t>> exits{5, -3};
    std::vector<ExitWindow> all{{-inf, inf}, {-inf, inf}};
    CHECK(indicator_exit_window(exits, all));
    std::vector<ExitWindow> tight{{10.0, inf}, {-inf, inf}};
    CHECK_FALSE(indicator_exit_window(exits, tight));
    exits[1].reset();
    CHECK_THROWS_AS(indicator_exit_window(exits, all), std::domain_error);
}

TEST_CASE("sandwich indicator") {
    const GeodesicPath low = make_path({{0, 0}, {1, 0}, {1, 1}});
    const GeodesicPath mid = make_path({{0, 0}, {0, 1}, {1, 1}});
    CHECK(indicator_sandwich(mid, mid, mid));
    CHECK(indicator_sandwich(mid, mid, low));
    CHECK_FALSE(indicator_sandwich(low, mid, low));
    const GeodesicPath other = make_path({{0, 0}, {0, 1}, {0, 2}});
    CHECK_THROWS_AS(indicator_sandwich(low, mid, other), std::domain_error);
}

TEST_CASE("crossing indicator") {
    const GeodesicPath p = make_path({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
    const std::vector<Point> seg{{1, 1}};
    CHECK(indicator_crossing(p, seg));
    const std::vector<Point> far{{0, 5}, {1, 4}};
    CHECK_FALSE(indicator_crossing(p, far));
}

TEST_CASE("corner frame matches the segment crossing on sampled geodesics") {
    // E1 = B equivalence: the last crossing of the corner lines lies on the
    // arms exactly when the path meets the antidiagonal segment.
    const double s_param = 0.8, t_param = 0.3;
    const std::int64_t N = 80;
    const CornerFrame frame = corner_frame(s_param, t_param, N);
    std::vector<Point> arms = frame.h_arm;
    arms.insert(arms.end(), frame.v_arm.begin(), frame.v_arm.end());
    const Region seg = segment_region(s_param, t_param, N);
    std::size_t mismatches = 0;
    for (std::uint64_t t = 0; t < 300; ++t) {
        const RngStream st = RngStream(4).derive("frame").derive(t);
        const WeightField f(st, Rect{{0, 0}, {N, N}});
        const FieldBlock block(f, f.region());
        // Endpoints across the cylinder width to vary the crossing offset.
        const Point x{N - 4 + static_cast<std::int64_t>(t % 8), N + 4 - static_cast<std::int64_t>(t % 8)};
        if (!leq(Point{0, 0}, x) || !leq(x, Point{N, N})) continue;
        const GeodesicPath g = backtrack_geodesic(passage_time(block, {0, 0}, x), x);
        const bool crosses_segment = indicator_crossing(g, seg);
        const std::optional<Point> z = last_crossing(g, frame.corner);
        const bool on_arms = z && (std::find(arms.begin(), arms.end(), *z) != arms.end());
        mismatches += crosses_segment != on_arms;
    }
    CHECK(mismatches == 0);
}
