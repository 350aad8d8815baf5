#include <cmath>

#include "doctest.h"
#include "lpp/oracles.hpp"
#include "lpp/passage.hpp"
#include "lpp/rng.hpp"
#include "lpp/weight_field.hpp"

using namespace lpp;

namespace {
FieldBlock grid2x2(double w00, double w10, double w01, double w11) {
    const Rect r{{0, 0}, {1, 1}};
    std::vector<double> v(4);
    v[r.index({0, 0})] = w00;
    v[r.index({1, 0})] = w10;
    v[r.index({0, 1})] = w01;
    v[r.index({1, 1})] = w11;
    return FieldBlock::from_values(r, std::move(v));
}

double path_weight(const FieldBlock& f, const GeodesicPath& p) {
    double s = 0.0;
    for (std::size_t i = p.bulk_begin(); i < p.sites.size(); ++i) s += f.at(p.sites[i]);
    return s;
}
}  // namespace

TEST_CASE("single-site path") {
    const WeightField f(RngStream(1), Rect{{0, 0}, {3, 3}});
    const PassageTable t = passage_time(f, {2, 2}, {2, 2});
    CHECK(t.value_at({2, 2}) == f.weight_at({2, 2}));
    CHECK(backtrack_geodesic(t, {2, 2}).sites == std::vector<Point>{{2, 2}});
}

TEST_CASE("2x2 hand example") {
    const FieldBlock f = grid2x2(1.0, 2.0, 3.0, 4.0);
    const PassageTable t = passage_time(f, {0, 0}, {1, 1});
    CHECK(t.value_at({1, 1}) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(backtrack_geodesic(t, {1, 1}).sites == std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("ties break toward e2") {
    const FieldBlock f = grid2x2(1.0, 2.5, 2.5, 1.0);
    const PassageTable t = passage_time(f, {0, 0}, {1, 1});
    CHECK(t.pred_at({1, 1}) == Pred::from_e2);
    CHECK(backtrack_geodesic(t, {1, 1}).sites == std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("forced path on a 1 x n strip") {
    const WeightField f(RngStream(7), Rect{{0, 0}, {6, 0}});
    const PassageTable t = passage_time(f, {0, 0}, {6, 0});
    const GeodesicPath p = backtrack_geodesic(t, {6, 0});
    CHECK(p.sites.size() == 7);
    for (const bool step_e2 : p.steps()) CHECK_FALSE(step_e2);
}

TEST_CASE("DP and geodesics match exhaustive enumeration on random grids") {
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        const RngStream s = RngStream(5150).derive(trial);
        const std::int64_t w = 1 + static_cast<std::int64_t>(trial % 6);
        const std::int64_t h = 1 + static_cast<std::int64_t>((trial / 6) % 6);
        const Point target{w - 1, h - 1};
        const WeightField field(s, Rect{{0, 0}, target});
        const FieldBlock block(field, field.region());
        const PassageTable t = passage_time(block, {0, 0}, target);
        const EnumResult ref = enumerate_passage(block, {0, 0}, target, 1e-12);
        REQUIRE(t.value_at(target) == doctest::Approx(ref.value).epsilon(1e-12));
        REQUIRE(ref.argmax_count == 1);
        REQUIRE(backtrack_geodesic(t, target).sites == ref.best_path);
    }
}

TEST_CASE("recursion identity holds exactly as computed") {
    const WeightField f(RngStream(88), Rect{{0, 0}, {60, 60}});
    const FieldBlock block(f, f.region());
    const PassageTable t = passage_time(block, {0, 0}, {60, 60});
    const RngStream pick = RngStream(11).derive("sites");
    for (std::uint64_t c = 0; c < 1000; ++c) {
        const std::int64_t i = 1 + static_cast<std::int64_t>(pick.bits(2 * c) % 60);
        const std::int64_t j = 1 + static_cast<std::int64_t>(pick.bits(2 * c + 1) % 60);
        const double g = t.value_at({i, j});
        const double m = std::max(t.value_at({i - 1, j}), t.value_at({i, j - 1}));
        REQUIRE(g - block.at({i, j}) - m == 0.0);
    }
}

TEST_CASE("increasing one weight never decreases any value") {
    const Rect r{{0, 0}, {5, 5}};
    const WeightField f(RngStream(202), r);
    std::vector<double> v(r.size());
    for (std::int64_t i = 0; i <= 5; ++i)
        for (std::int64_t j = 0; j <= 5; ++j) v[r.index({i, j})] = f.weight_at({i, j});
    const PassageTable base = passage_time(FieldBlock::from_values(r, v), {0, 0}, {5, 5});
    v[r.index({2, 3})] += 1.5;
    const PassageTable bumped = passage_time(FieldBlock::from_values(r, std::move(v)), {0, 0}, {5, 5});
    for (std::int64_t i = 0; i <= 5; ++i)
        for (std::int64_t j = 0; j <= 5; ++j) REQUIRE(bumped.value_at({i, j}) >= base.value_at({i, j}));
}

TEST_CASE("reconstructed path weight equals the table value") {
    const WeightField f(RngStream(303), Rect{{0, 0}, {80, 50}});
    const FieldBlock block(f, f.region());
    const PassageTable t = passage_time(block, {0, 0}, {80, 50});
    const GeodesicPath p = backtrack_geodesic(t, {80, 50});
    CHECK(path_weight(block, p) == doctest::Approx(t.value_at({80, 50})).epsilon(1e-12));
}

TEST_CASE("flags-only tables refuse value queries but still backtrack") {
    const WeightField f(RngStream(4), Rect{{0, 0}, {8, 8}});
    const PassageTable t = passage_time(FieldBlock(f, f.region()), {0, 0}, {8, 8}, false);
    CHECK_THROWS_AS(t.value_at({8, 8}), std::logic_error);
    const GeodesicPath p = backtrack_geodesic(t, {8, 8});
    CHECK(p.sites.front() == Point{0, 0});
    CHECK(std::isnan(p.total_weight));
}

TEST_CASE("domain errors") {
    const WeightField f(RngStream(9), Rect{{0, 0}, {4, 4}});
    CHECK_THROWS_AS(passage_time(f, {2, 2}, {1, 3}), std::domain_error);
}

TEST_CASE("level cut agrees with full backtracking") {
    const WeightField f(RngStream(606), Rect{{0, 0}, {40, 40}});
    const FieldBlock block(f, f.region());
    const PassageTable t = passage_time(block, {0, 0}, {40, 40});
    LevelCut cut(t, 30);
    for (std::int64_t d = -6; d <= 6; d += 2) {
        const Point endpoint{35 + d / 2, 35 - d / 2};
        const GeodesicPath p = backtrack_geodesic(t, endpoint);
        Point site;
        REQUIRE(p.site_at_level(30, site));
        REQUIRE(cut.x1_at_cut(endpoint) == site.x1);
    }
    CHECK_THROWS_AS(cut.x1_at_cut(Point{10, 10}), std::domain_error);
}
