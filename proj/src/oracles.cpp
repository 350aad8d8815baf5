#include "lpp/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace lpp {

EnumResult enumerate_passage(const FieldBlock& field, Point origin, Point target, double tol) {
    if (!leq(origin, target)) throw std::domain_error("enumerate_passage: origin must be <= target");
    EnumResult res;
    res.value = -std::numeric_limits<double>::infinity();
    std::vector<Point> cur{origin};
    double sum = field.at(origin);
    std::function<void()> walk = [&]() {
        const Point p = cur.back();
        if (p == target) {
            if (sum > res.value + tol) {
                res.value = sum;
                res.best_path = cur;
                res.argmax_count = 1;
            } else if (sum > res.value - tol) {
                res.argmax_count++;
                if (sum > res.value) {
                    res.value = sum;
                    res.best_path = cur;
                }
            }
            return;
        }
        for (Point step : {e1, e2}) {
            const Point q = p + step;
            if (!leq(q, target)) continue;
            cur.push_back(q);
            sum += field.at(q);
            walk();
            sum -= field.at(q);
            cur.pop_back();
        }
    };
    walk();
    return res;
}

double enumerate_stationary_value(const AxisBoundary& boundary, const FieldBlock& field, Point target) {
    const Point o = boundary.base;
    if (!(target.x1 > o.x1 && target.x2 > o.x2)) {
        throw std::domain_error("enumerate_stationary_value: target must be in the open quadrant");
    }
    double best = -std::numeric_limits<double>::infinity();
    double isum = 0.0;
    for (std::int64_t k = 1; k <= target.x1 - o.x1; ++k) {
        isum += boundary.I[static_cast<std::size_t>(k - 1)];
        best = std::max(best, isum + enumerate_passage(field, Point{o.x1 + k, o.x2 + 1}, target).value);
    }
    double jsum = 0.0;
    for (std::int64_t l = 1; l <= target.x2 - o.x2; ++l) {
        jsum += boundary.J[static_cast<std::size_t>(l - 1)];
        best = std::max(best, jsum + enumerate_passage(field, Point{o.x1 + 1, o.x2 + l}, target).value);
    }
    return best;
}

double enumerate_backward_value(const BackwardBoundary& boundary, const WeightField& field, Point target) {
    const Point o = boundary.apex;
    if (!(target.x1 < o.x1 && target.x2 < o.x2)) {
        throw std::domain_error("enumerate_backward_value: target must be strictly southwest");
    }
    // Mirror into forward coordinates and enumerate there.
    const Point m{o.x1 - target.x1, o.x2 - target.x2};
    const Rect mr(Point{0, 0}, m);
    std::vector<double> vals(mr.size());
    for (std::int64_t u1 = 0; u1 <= m.x1; ++u1)
        for (std::int64_t u2 = 0; u2 <= m.x2; ++u2)
            vals[mr.index({u1, u2})] = field.weight_at({o.x1 - u1, o.x2 - u2});
    const FieldBlock block = FieldBlock::from_values(mr, std::move(vals));
    AxisBoundary fwd;
    fwd.base = {0, 0};
    fwd.rho = boundary.rho;
    fwd.I = boundary.Ihat;
    fwd.J = boundary.Jhat;
    return enumerate_stationary_value(fwd, block, m);
}

double enumerate_line_value(const FieldBlock& field, const InitialCondition& h0, Point target) {
    if (level(target) < 1) throw std::domain_error("enumerate_line_value: target on or below the line");
    double best = -std::numeric_limits<double>::infinity();
    for (std::int64_t k = -h0.radius; k <= h0.radius; ++k) {
        const Point start{k, -k};
        if (!leq(start, target)) continue;
        if (start == target) continue;
        // First step leaves the line; bulk weights begin at the next site.
        for (Point step : {e1, e2}) {
            const Point q = start + step;
            if (!leq(q, target)) continue;
            best = std::max(best, h0.at(k) + enumerate_passage(field, q, target).value);
        }
    }
    return best;
}

std::vector<Point> path_intersection(const GeodesicPath& a, const GeodesicPath& b) {
    std::vector<Point> common;
    for (std::size_t i = a.bulk_begin(); i < a.sites.size(); ++i) {
        for (std::size_t j = b.bulk_begin(); j < b.sites.size(); ++j) {
            if (a.sites[i] == b.sites[j]) common.push_back(a.sites[i]);
        }
    }
    return common;
}

}  // namespace lpp
