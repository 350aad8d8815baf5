#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lpp/line_to_point.hpp"
#include "lpp/passage.hpp"
#include "lpp/path.hpp"
#include "lpp/rng.hpp"
#include "lpp/weight_field.hpp"

namespace lpp {

// Density parameter of a stationary model, in (0,1).
struct Density {
    double rho;
    explicit Density(double r) : rho(r) {
        if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("Density: rho must lie in (0,1)");
    }
};

// xi(rho) = ((1-rho)^2, rho^2) / ((1-rho)^2 + rho^2)
std::pair<double, double> characteristic_direction(double rho);
// rho(xi) = sqrt(xi2) / (sqrt(xi1) + sqrt(xi2))
double density_of(double xi1, double xi2);

// Boundary weights on the axes: I ~ Exp(1-rho) along o + i e1, J ~ Exp(rho)
// along o + j e2.  The per-index uniforms come from fixed sub-streams of the
// model stream, so two boundaries built from the same stream with different
// densities are coupled monotonically through shared uniforms.
struct AxisBoundary {
    Point base{};
    double rho = 0.5;
    std::vector<double> I;  // I[i-1] = weight at base + i e1
    std::vector<double> J;  // J[j-1] = weight at base + j e2
};

AxisBoundary build_axis_boundary(const RngStream& model_stream, double rho, Point o, std::int64_t extent);

// Stationary table over [o, hi]: axis sums on the boundary, recursion in the bulk.
PassageTable stationary_table(const AxisBoundary& boundary, const FieldBlock& field, Point hi,
                              bool keep_values = true);

// Signed exit point: +k when the geodesic leaves via o + k e1, -l via o + l e2.
// A target on an axis exits at its own offset (empty bulk part).
std::int64_t exit_point(const PassageTable& table, Point target);

std::pair<PassageTable, std::int64_t> stationary_passage(const AxisBoundary& boundary, const FieldBlock& field,
                                                         Point target, bool keep_values = true);

// Backward model: down-left paths from the apex with Ihat/Jhat on the
// north/east boundary.  Evaluated as the forward model on the point-reflected
// field.
struct BackwardBoundary {
    Point apex{};
    double rho = 0.5;
    std::vector<double> Ihat;  // weight at apex - i e1
    std::vector<double> Jhat;  // weight at apex - j e2
};

BackwardBoundary build_backward_boundary(const RngStream& model_stream, double rho, Point apex,
                                         std::int64_t extent);

struct BackwardPassage {
    double value = 0.0;
    std::int64_t exit_point = 0;
};

BackwardPassage backward_stationary_passage(const BackwardBoundary& boundary, const WeightField& field,
                                            Point target);

// Antidiagonal realization of the stationary model: h0(k,-k) partial sums of
// X - Y with X ~ Exp(1-rho), Y ~ Exp(rho).
InitialCondition stationary_line_profile(const RngStream& model_stream, double rho, std::int64_t radius);
// Same construction with X, Y ~ Exp(1/2) scaled by sigma; sigma = 0 is flat,
// sigma = 1 reproduces stationary_line_profile at rho = 1/2 draw for draw.
InitialCondition interpolating_line_profile(const RngStream& model_stream, double sigma, std::int64_t radius);

// Cator-Pimentel comparison between plain and stationary increments for p1
// before p2 in the down-right order.  Each branch applies when its exit-sign
// precondition holds; `holds` reports the corresponding inequality with an
// epsilon slack against float rounding.
struct ComparisonReport {
    std::int64_t z1 = 0;
    std::int64_t z2 = 0;
    bool branch_pos_applies = false;  // Z(p1) >= 0
    bool branch_pos_holds = true;     // G(p2)-G(p1) <= Grho(p2)-Grho(p1)
    bool branch_neg_applies = false;  // Z(p2) <= 0
    bool branch_neg_holds = true;     // reversed inequality
};

ComparisonReport check_comparison(const FieldBlock& field, const AxisBoundary& boundary, Point p1, Point p2,
                                  double eps = 1e-7);

// Rightmost offset at which the path touches the horizontal line x2 = row,
// relative to ref_x1.
std::int64_t horizontal_exit(const GeodesicPath& path, std::int64_t row, std::int64_t ref_x1);

}  // namespace lpp
