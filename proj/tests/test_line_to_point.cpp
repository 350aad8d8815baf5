#include <cmath>

#include "doctest.h"
#include "lpp/oracles.hpp"
#include "lpp/rng.hpp"
#include "lpp/stationary.hpp"
#include "lpp/stats.hpp"

using namespace lpp;

TEST_CASE("flat profile with radius 0 reduces to point-to-point from the origin") {
    const WeightField f(RngStream(12), Rect{{-1, -1}, {10, 10}});
    const InitialCondition h0 = flat_h0(0);
    const Point target{6, 4};
    const LinePassage lp = passage_time_from_line(f, h0, target);
    const PassageTable plain = passage_time(f, {0, 0}, target);
    // The line start carries no weight, so the origin's own weight is excluded.
    CHECK(lp.value ==
          doctest::Approx(plain.value_at(target) - f.weight_at({0, 0})).epsilon(1e-12));
    CHECK(lp.exit_point == 0);
}

TEST_CASE("a dominating profile value pins the exit point") {
    InitialCondition h0 = flat_h0(5);
    h0.profile[static_cast<std::size_t>(h0.radius + 3)] = 1e6;
    const WeightField f(RngStream(13), Rect{{-5, -5}, {12, 12}});
    const LinePassage lp = passage_time_from_line(f, h0, {9, 9});
    CHECK(lp.exit_point == 3);
    CHECK_FALSE(lp.truncated);
}

TEST_CASE("line-to-point value matches enumeration over starts") {
    for (std::uint64_t t = 0; t < 25; ++t) {
        const RngStream s = RngStream(900).derive(t);
        const Point target{4, 3};
        const Rect rect{{-3, -3}, target};
        const WeightField field(s, rect);
        const FieldBlock block(field, rect);
        const InitialCondition h0 = stationary_line_profile(s.derive("ic"), 0.5, 3);
        const PassageTable tab = line_to_point_table(block, h0, rect);
        const LinePassage lp = line_passage_at(tab, h0, target);
        const double ref = enumerate_line_value(block, h0, target);
        REQUIRE(lp.value == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("truncation is flagged when the argmax sits on the profile edge") {
    InitialCondition h0 = flat_h0(2);
    h0.profile[0] = 1e7;  // k = -2
    const WeightField f(RngStream(14), Rect{{-2, -2}, {8, 8}});
    const LinePassage lp = passage_time_from_line(f, h0, {5, 5});
    CHECK(lp.exit_point == -2);
    CHECK(lp.truncated);
}

TEST_CASE("targets on or below the line are rejected") {
    const WeightField f(RngStream(15), Rect{{-4, -4}, {8, 8}});
    CHECK_THROWS_AS(passage_time_from_line(f, flat_h0(2), Point{2, -2}), std::domain_error);
    CHECK_THROWS_AS(passage_time_from_line(f, flat_h0(2), Point{3, -4}), std::domain_error);
}

TEST_CASE("antidiagonal profiles: pinned origin, increments, interpolation") {
    const RngStream s = RngStream(21).derive("model");
    const InitialCondition st = stationary_line_profile(s, 0.6, 50);
    CHECK(st.at(0) == 0.0);

    // Interpolating family: sigma 0 is flat, sigma 1 equals the rho = 1/2 draw.
    const InitialCondition flat = interpolating_line_profile(s, 0.0, 50);
    for (double v : flat.profile) CHECK(v == 0.0);
    const InitialCondition one = interpolating_line_profile(s, 1.0, 50);
    const InitialCondition half = stationary_line_profile(s, 0.5, 50);
    CHECK(one.profile == half.profile);
    const InitialCondition mid = interpolating_line_profile(s, 0.5, 50);
    for (std::size_t i = 0; i < mid.profile.size(); ++i) {
        CHECK(mid.profile[i] == doctest::Approx(0.5 * half.profile[i]).epsilon(1e-15));
    }
}

TEST_CASE("profile increments at rho = 1/2 have mean zero") {
    const std::int64_t radius = 50000;
    const InitialCondition h0 =
        stationary_line_profile(RngStream(22).derive("mean"), 0.5, radius);
    std::vector<double> inc;
    inc.reserve(2 * static_cast<std::size_t>(radius));
    for (std::int64_t k = -radius + 1; k <= radius; ++k) inc.push_back(h0.at(k) - h0.at(k - 1));
    const SampleMoments m = sample_moments(inc);
    // X - Y with X, Y ~ Exp(1/2): variance 8.
    CHECK(std::abs(m.mean) <= 3.0 * std::sqrt(8.0 / static_cast<double>(m.n)));
}
