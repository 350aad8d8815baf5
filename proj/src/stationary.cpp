#include "lpp/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpp {

std::pair<double, double> characteristic_direction(double rho) {
    Density d(rho);
    const double a = (1.0 - d.rho) * (1.0 - d.rho);
    const double b = d.rho * d.rho;
    return {a / (a + b), b / (a + b)};
}

double density_of(double xi1, double xi2) {
    if (!(xi1 > 0.0) || !(xi2 > 0.0)) throw std::invalid_argument("density_of: direction components must be positive");
    const double s1 = std::sqrt(xi1);
    const double s2 = std::sqrt(xi2);
    return s2 / (s1 + s2);
}

AxisBoundary build_axis_boundary(const RngStream& model_stream, double rho, Point o, std::int64_t extent) {
    Density d(rho);
    if (extent < 1) throw std::invalid_argument("build_axis_boundary: extent must be >= 1");
    AxisBoundary b;
    b.base = o;
    b.rho = d.rho;
    b.I.resize(static_cast<std::size_t>(extent));
    b.J.resize(static_cast<std::size_t>(extent));
    const RngStream si = model_stream.derive("axis-i");
    const RngStream sj = model_stream.derive("axis-j");
    for (std::int64_t k = 0; k < extent; ++k) {
        b.I[static_cast<std::size_t>(k)] = exponential_from_uniform(si.uniform(static_cast<std::uint64_t>(k)), 1.0 - d.rho);
        b.J[static_cast<std::size_t>(k)] = exponential_from_uniform(sj.uniform(static_cast<std::uint64_t>(k)), d.rho);
    }
    return b;
}

PassageTable stationary_table(const AxisBoundary& boundary, const FieldBlock& field, Point hi, bool keep_values) {
    const Point o = boundary.base;
    if (!leq(o, hi)) throw std::domain_error("stationary_table: hi must be >= base");
    const Rect r(o, hi);
    const std::int64_t need = std::max(hi.x1 - o.x1, hi.x2 - o.x2);
    if (static_cast<std::int64_t>(boundary.I.size()) < need || static_cast<std::int64_t>(boundary.J.size()) < need) {
        throw std::invalid_argument("stationary_table: boundary extent too small for region");
    }
    PassageTable tab;
    tab.kind = PassageTable::Kind::stationary;
    tab.origin = o;
    tab.region = r;
    tab.dirs = DirGrid(r);
    tab.has_values = keep_values;
    if (keep_values) tab.values.resize(r.size());

    std::vector<double> row(static_cast<std::size_t>(r.height()));
    double i_sum = 0.0;
    for (std::int64_t x1 = o.x1; x1 <= hi.x1; ++x1) {
        if (x1 > o.x1) i_sum += boundary.I[static_cast<std::size_t>(x1 - o.x1 - 1)];
        for (std::int64_t x2 = o.x2; x2 <= hi.x2; ++x2) {
            const Point p{x1, x2};
            const std::size_t j = static_cast<std::size_t>(x2 - o.x2);
            double g;
            Pred d;
            if (x1 == o.x1 && x2 == o.x2) {
                g = 0.0;
                d = Pred::none;
            } else if (x1 == o.x1) {
                g = row[j - 1] + boundary.J[j - 1];
                d = Pred::boundary;
            } else if (x2 == o.x2) {
                g = i_sum;
                d = Pred::boundary;
            } else {
                const double a = row[j];      // G(x - e1)
                const double b = row[j - 1];  // G(x - e2)
                const double w = field.at(p);
                if (b >= a) {
                    g = b + w;
                    d = Pred::from_e2;
                } else {
                    g = a + w;
                    d = Pred::from_e1;
                }
            }
            row[j] = g;
            tab.dirs.set(p, d);
            if (keep_values) tab.values[r.index(p)] = g;
        }
    }
    return tab;
}

std::int64_t exit_point(const PassageTable& table, Point target) {
    if (table.kind != PassageTable::Kind::stationary) throw std::logic_error("exit_point: stationary table required");
    if (!table.region.contains(target)) throw std::domain_error("exit_point: target outside table");
    const Point o = table.origin;
    Point p = target;
    while (p.x1 > o.x1 && p.x2 > o.x2) {
        if (!table.step_back(p)) throw std::logic_error("exit_point: truncated predecessor chain");
    }
    return (p.x2 == o.x2) ? (p.x1 - o.x1) : -(p.x2 - o.x2);
}

std::pair<PassageTable, std::int64_t> stationary_passage(const AxisBoundary& boundary, const FieldBlock& field,
                                                         Point target, bool keep_values) {
    PassageTable tab = stationary_table(boundary, field, target, keep_values);
    const std::int64_t z = exit_point(tab, target);
    return {std::move(tab), z};
}

BackwardBoundary build_backward_boundary(const RngStream& model_stream, double rho, Point apex,
                                         std::int64_t extent) {
    Density d(rho);
    if (extent < 1) throw std::invalid_argument("build_backward_boundary: extent must be >= 1");
    BackwardBoundary b;
    b.apex = apex;
    b.rho = d.rho;
    b.Ihat.resize(static_cast<std::size_t>(extent));
    b.Jhat.resize(static_cast<std::size_t>(extent));
    const RngStream si = model_stream.derive("bwd-i");
    const RngStream sj = model_stream.derive("bwd-j");
    for (std::int64_t k = 0; k < extent; ++k) {
        b.Ihat[static_cast<std::size_t>(k)] = exponential_from_uniform(si.uniform(static_cast<std::uint64_t>(k)), 1.0 - d.rho);
        b.Jhat[static_cast<std::size_t>(k)] = exponential_from_uniform(sj.uniform(static_cast<std::uint64_t>(k)), d.rho);
    }
    return b;
}

BackwardPassage backward_stationary_passage(const BackwardBoundary& boundary, const WeightField& field,
                                            Point target) {
    const Point o = boundary.apex;
    if (!(target.x1 < o.x1 && target.x2 < o.x2)) {
        throw std::domain_error("backward_stationary_passage: target must be strictly southwest of apex");
    }
    // Point reflection u = apex - x maps down-left paths to up-right ones.
    const Point m{o.x1 - target.x1, o.x2 - target.x2};
    const Rect mr(Point{0, 0}, m);
    std::vector<double> vals(mr.size());
    for (std::int64_t u1 = 0; u1 <= m.x1; ++u1) {
        for (std::int64_t u2 = 0; u2 <= m.x2; ++u2) {
            vals[mr.index({u1, u2})] = field.weight_at({o.x1 - u1, o.x2 - u2});
        }
    }
    AxisBoundary fwd;
    fwd.base = Point{0, 0};
    fwd.rho = boundary.rho;
    fwd.I = boundary.Ihat;
    fwd.J = boundary.Jhat;
    auto [tab, z] = stationary_passage(fwd, FieldBlock::from_values(mr, std::move(vals)), m, true);
    return {tab.value_at(m), z};
}

ComparisonReport check_comparison(const FieldBlock& field, const AxisBoundary& boundary, Point p1, Point p2,
                                  double eps) {
    if (!before(p1, p2)) throw std::domain_error("check_comparison: p1 must precede p2 in the down-right order");
    const Point o = boundary.base;
    if (!(p1.x1 > o.x1 && p1.x2 > o.x2 && p2.x1 > o.x1 && p2.x2 > o.x2)) {
        throw std::domain_error("check_comparison: points must lie in the open quadrant");
    }
    const Point hi{p2.x1, p1.x2};
    const PassageTable stat = stationary_table(boundary, field, hi, true);
    const PassageTable plain = passage_time(field, o, hi, true);

    ComparisonReport rep;
    rep.z1 = exit_point(stat, p1);
    rep.z2 = exit_point(stat, p2);
    const double dg = plain.value_at(p2) - plain.value_at(p1);
    const double dgr = stat.value_at(p2) - stat.value_at(p1);
    rep.branch_pos_applies = rep.z1 >= 0;
    rep.branch_neg_applies = rep.z2 <= 0;
    if (rep.branch_pos_applies) rep.branch_pos_holds = dg <= dgr + eps;
    if (rep.branch_neg_applies) rep.branch_neg_holds = dg >= dgr - eps;
    return rep;
}

std::int64_t horizontal_exit(const GeodesicPath& path, std::int64_t row, std::int64_t ref_x1) {
    bool found = false;
    std::int64_t best = 0;
    for (const Point& p : path.sites) {
        if (p.x2 == row) {
            if (!found || p.x1 > best) best = p.x1;
            found = true;
        }
    }
    if (!found) throw std::domain_error("horizontal_exit: path does not touch the row");
    return best - ref_x1;
}

InitialCondition stationary_line_profile(const RngStream& model_stream, double rho, std::int64_t radius) {
    Density d(rho);
    if (radius < 1) throw std::invalid_argument("stationary_line_profile: radius must be >= 1");
    InitialCondition ic;
    ic.radius = radius;
    ic.profile.assign(static_cast<std::size_t>(2 * radius + 1), 0.0);
    const RngStream sx = model_stream.derive("ic-x");
    const RngStream sy = model_stream.derive("ic-y");
    auto ctr = [](std::int64_t k) {
        return (static_cast<std::uint64_t>(k) << 1) ^ static_cast<std::uint64_t>(k >> 63);
    };
    auto incr = [&](std::int64_t k) {
        const double x = exponential_from_uniform(sx.uniform(ctr(k)), 1.0 - d.rho);
        const double y = exponential_from_uniform(sy.uniform(ctr(k)), d.rho);
        return x - y;
    };
    for (std::int64_t k = 1; k <= radius; ++k) {
        ic.profile[static_cast<std::size_t>(radius + k)] = ic.at(k - 1) + incr(k);
    }
    for (std::int64_t k = -1; k >= -radius; --k) {
        ic.profile[static_cast<std::size_t>(radius + k)] = ic.at(k + 1) - incr(k + 1);
    }
    return ic;
}

InitialCondition interpolating_line_profile(const RngStream& model_stream, double sigma, std::int64_t radius) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("interpolating_line_profile: sigma must be >= 0");
    InitialCondition ic = stationary_line_profile(model_stream, 0.5, radius);
    for (double& v : ic.profile) v *= sigma;
    ic.family_sigma = sigma;
    return ic;
}

}  // namespace lpp
