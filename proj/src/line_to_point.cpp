#include "lpp/line_to_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpp {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

InitialCondition flat_h0(std::int64_t radius) {
    InitialCondition ic;
    ic.radius = radius;
    ic.profile.assign(static_cast<std::size_t>(2 * radius + 1), 0.0);
    ic.family_sigma = 0.0;
    return ic;
}

std::int64_t default_truncation_radius(std::int64_t n) {
    if (n < 2) return 1;
    const double v = 3.0 * std::pow(static_cast<double>(n), 2.0 / 3.0) * std::log(static_cast<double>(n));
    return static_cast<std::int64_t>(std::ceil(v));
}

PassageTable line_to_point_table(const FieldBlock& field, const InitialCondition& h0, Rect region,
                                 bool keep_values) {
    if (level(region.hi) < 1) throw std::domain_error("line_to_point_table: region entirely on or below the line");
    PassageTable tab;
    tab.kind = PassageTable::Kind::line_to_point;
    tab.origin = Point{0, 0};
    tab.region = region;
    tab.dirs = DirGrid(region);
    tab.has_values = keep_values;
    if (keep_values) tab.values.assign(region.size(), kNegInf);

    std::vector<double> row(static_cast<std::size_t>(region.height()), kNegInf);
    for (std::int64_t x1 = region.lo.x1; x1 <= region.hi.x1; ++x1) {
        for (std::int64_t x2 = region.lo.x2; x2 <= region.hi.x2; ++x2) {
            const Point p{x1, x2};
            const std::size_t j = static_cast<std::size_t>(x2 - region.lo.x2);
            const std::int64_t lev = x1 + x2;
            if (lev < 1) {
                row[j] = kNegInf;
                continue;
            }
            double a, b;  // predecessors via e1 / via e2
            if (lev == 1) {
                a = h0.covers(x1 - 1) ? h0.at(x1 - 1) : kNegInf;
                b = h0.covers(x1) ? h0.at(x1) : kNegInf;
            } else {
                a = (x1 > region.lo.x1) ? row[j] : kNegInf;
                b = (x2 > region.lo.x2) ? row[j - 1] : kNegInf;
            }
            if (a == kNegInf && b == kNegInf) {
                row[j] = kNegInf;
                tab.dirs.set(p, Pred::none);
                continue;
            }
            const double w = field.at(p);
            double g;
            Pred d;
            if (b >= a) {  // tie toward e2
                g = b + w;
                d = Pred::from_e2;
            } else {
                g = a + w;
                d = Pred::from_e1;
            }
            row[j] = g;
            tab.dirs.set(p, d);
            if (keep_values) tab.values[region.index(p)] = g;
        }
    }
    return tab;
}

LinePassage line_passage_at(const PassageTable& table, const InitialCondition& h0, Point target) {
    if (level(target) < 1) throw std::domain_error("line_passage_at: target on or below the line");
    if (table.pred_at(target) == Pred::none) throw std::domain_error("line_passage_at: target unreachable");
    const GeodesicPath path = backtrack_geodesic(table, target);
    LinePassage out;
    out.exit_point = path.start().x1;
    out.truncated = std::llabs(out.exit_point) >= h0.radius;
    out.value = table.has_values ? table.value_at(target) : std::numeric_limits<double>::quiet_NaN();
    return out;
}

LinePassage passage_time_from_line(const WeightField& field, const InitialCondition& h0, Point target) {
    if (level(target) < 1) throw std::domain_error("passage_time_from_line: target on or below the line");
    const std::int64_t k = std::min(h0.radius, std::max(target.x1, target.x2));
    const Rect region{Point{-k, -k}, target};
    const FieldBlock block(field, region);
    const PassageTable tab = line_to_point_table(block, h0, region, true);
    return line_passage_at(tab, h0, target);
}

}  // namespace lpp
