#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "lpp/passage.hpp"
#include "lpp/rng.hpp"
#include "lpp/weight_field.hpp"

namespace lpp {

// Height profile h0 on the antidiagonal {(k,-k)}, truncated to |k| <= radius.
struct InitialCondition {
    std::int64_t radius = 0;
    std::vector<double> profile;  // profile[radius + k] = h0(k,-k); h0(0) = 0
    std::optional<double> family_sigma;

    double at(std::int64_t k) const { return profile[static_cast<std::size_t>(radius + k)]; }
    bool covers(std::int64_t k) const { return k >= -radius && k <= radius; }
};

InitialCondition flat_h0(std::int64_t radius);

// Default truncation radius 3 N^{2/3} ln N (exit-point tails leave negligible
// mass beyond it); callers cap it at the geometric reach of their targets.
std::int64_t default_truncation_radius(std::int64_t n);

// DP over {x : level(x) >= 1, x inside region} seeded by h0 on the line.
// The start site on the line carries no bulk weight; every later site does.
PassageTable line_to_point_table(const FieldBlock& field, const InitialCondition& h0, Rect region,
                                 bool keep_values = true);

struct LinePassage {
    double value = 0.0;
    std::int64_t exit_point = 0;  // start site (k,-k)
    bool truncated = false;       // argmax sits on the truncation edge |k| = radius
};

LinePassage passage_time_from_line(const WeightField& field, const InitialCondition& h0, Point target);
LinePassage line_passage_at(const PassageTable& table, const InitialCondition& h0, Point target);

}  // namespace lpp
