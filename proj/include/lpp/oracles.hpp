#pragma once

// Brute-force reference implementations used by self-test, unit tests and the
// acceptance suite.  Independent of the DP code paths they check: everything
// here enumerates paths or decompositions directly.

#include <cstdint>
#include <vector>

#include "lpp/path.hpp"
#include "lpp/stationary.hpp"
#include "lpp/weight_field.hpp"

namespace lpp {

struct EnumResult {
    double value = 0.0;
    std::vector<Point> best_path;
    std::size_t argmax_count = 0;  // paths within tol of the max
};

// All up-right paths origin -> target, weights at every site summed.
EnumResult enumerate_passage(const FieldBlock& field, Point origin, Point target, double tol = 1e-9);

// Two-branch boundary decomposition of the stationary value at target.
double enumerate_stationary_value(const AxisBoundary& boundary, const FieldBlock& field, Point target);

// All down-left paths apex -> target with north/east boundary sums.
double enumerate_backward_value(const BackwardBoundary& boundary, const WeightField& field, Point target);

// Line-to-point by looping over the admissible starts and enumerating.
double enumerate_line_value(const FieldBlock& field, const InitialCondition& h0, Point target);

// Lattice-minimal common site from a full intersection scan.
std::vector<Point> path_intersection(const GeodesicPath& a, const GeodesicPath& b);

}  // namespace lpp
