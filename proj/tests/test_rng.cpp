#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lpp/rng.hpp"
#include "lpp/stats.hpp"
#include "lpp/weight_field.hpp"

using namespace lpp;

TEST_CASE("philox matches the reference known-answer vectors") {
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) ==
          std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
          std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
          std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("stream values are pure functions of (seed, labels, counter)") {
    const RngStream a = RngStream(123).derive("bulk");
    const RngStream b = RngStream(123).derive("bulk");
    CHECK(a.uniform(7) == b.uniform(7));

    // Evaluation order never changes values.
    std::vector<std::uint64_t> counters(1000);
    for (std::size_t i = 0; i < counters.size(); ++i) counters[i] = i;
    std::vector<double> forward, backward;
    for (auto c : counters) forward.push_back(a.uniform(c));
    std::reverse(counters.begin(), counters.end());
    for (auto c : counters) backward.push_back(a.uniform(c));
    std::reverse(backward.begin(), backward.end());
    CHECK(forward == backward);
}

TEST_CASE("derivation separates streams and respects label order") {
    const RngStream root(99);
    CHECK(root.derive("x").uniform(0) == root.derive("x").uniform(0));
    CHECK(root.derive("x").uniform(0) != root.derive("y").uniform(0));
    CHECK(root.derive("a").derive("b").uniform(0) != root.derive("b").derive("a").uniform(0));
    CHECK(root.derive(std::uint64_t{1}).uniform(0) != root.derive("1").uniform(0));
}

TEST_CASE("uniforms stay strictly inside (0,1)") {
    const RngStream s = RngStream(5).derive("u");
    for (std::uint64_t c = 0; c < 20000; ++c) {
        const double u = s.uniform(c);
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("inverse-CDF boundary values") {
    CHECK(exponential_from_uniform(std::exp(-2.0), 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    const double near_one = std::nextafter(1.0, 0.0);
    CHECK(exponential_from_uniform(near_one, 1.0) > 0.0);
    CHECK(exponential_from_uniform(near_one, 1.0) < 1e-12);
    CHECK_THROWS_AS(exponential_from_uniform(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(exponential_from_uniform(0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(exponential_from_uniform(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(exponential_from_uniform(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("law of large numbers at rate 1/2") {
    const RngStream s = RngStream(2024).derive("lln");
    const std::size_t n = 100000;
    double sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) sum += s.exponential(0.5, c);
    const double mean = sum / static_cast<double>(n);
    const double se = 2.0 / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(mean - 2.0) <= 3.0 * se);
}

TEST_CASE("sibling streams are uncorrelated") {
    const RngStream root(31415);
    const RngStream a = root.derive("bulk");
    const RngStream b = root.derive("boundary-rho");
    const std::size_t n = 10000;
    std::vector<double> xs(n), ys(n);
    for (std::size_t c = 0; c < n; ++c) {
        xs[c] = a.uniform(c);
        ys[c] = b.uniform(c);
    }
    CHECK(std::abs(correlation(xs, ys)) <= 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("marginals pass KS at significance 0.01") {
    const RngStream s = RngStream(777).derive("ks");
    std::vector<double> u(10000), x(10000);
    for (std::size_t c = 0; c < u.size(); ++c) {
        u[c] = s.uniform(c);
        x[c] = s.derive("e").exponential(1.0, c);
    }
    CHECK(ks_pvalue(ks_statistic_uniform(u), u.size()) >= 0.01);
    CHECK(ks_pvalue(ks_statistic_exponential(x, 1.0), x.size()) >= 0.01);
}

TEST_CASE("weight field is idempotent, in-region, Exp(1)") {
    const Rect region{{-50, -50}, {400, 400}};
    const WeightField f(RngStream(808), region);
    CHECK(f.weight_at({3, 7}) == f.weight_at({3, 7}));
    CHECK_THROWS_AS(f.weight_at({401, 0}), std::out_of_range);

    const std::size_t n = 100000;
    std::vector<double> w;
    w.reserve(n);
    for (std::int64_t i = 0; i < 400; ++i)
        for (std::int64_t j = 0; j < 250; ++j) w.push_back(f.weight_at({i, j}));
    const SampleMoments m = sample_moments(w);
    CHECK(std::abs(m.mean - 1.0) <= 3.0 / std::sqrt(static_cast<double>(m.n)));
    // Var of the squared deviation is 8 for Exp(1), hence the 3 sigma band.
    CHECK(std::abs(m.variance - 1.0) <= 3.0 * std::sqrt(8.0 / static_cast<double>(m.n)));
}

TEST_CASE("field block reproduces weight_at bit for bit") {
    const WeightField f(RngStream(4), Rect{{-3, -3}, {20, 20}});
    const FieldBlock block(f, Rect{{-2, 1}, {10, 9}});
    for (std::int64_t i = -2; i <= 10; ++i)
        for (std::int64_t j = 1; j <= 9; ++j) REQUIRE(block.at({i, j}) == f.weight_at({i, j}));
}

TEST_CASE("fields with different regions agree on the overlap") {
    const RngStream s(606);
    const WeightField f1(s, Rect{{0, 0}, {9, 9}});
    const WeightField f2(s, Rect{{-5, -5}, {30, 30}});
    for (std::int64_t i = 0; i < 10; ++i)
        for (std::int64_t j = 0; j < 10; ++j) REQUIRE(f1.weight_at({i, j}) == f2.weight_at({i, j}));
}
