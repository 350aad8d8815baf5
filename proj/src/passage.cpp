#include "lpp/passage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpp {

double PassageTable::value_at(Point p) const {
    if (!has_values) throw std::logic_error("PassageTable::value_at: table built without values");
    if (!region.contains(p)) throw std::out_of_range("PassageTable::value_at: site outside region");
    return values[region.index(p)];
}

bool PassageTable::step_back(Point& p) const {
    switch (dirs.at(p)) {
        case Pred::from_e1:
            p = p - e1;
            return true;
        case Pred::from_e2:
            p = p - e2;
            return true;
        case Pred::boundary:
            // Weightless axis site of a stationary table; continue toward the base.
            if (p == origin) return false;
            p = (p.x2 == origin.x2) ? p - e1 : p - e2;
            return true;
        case Pred::none:
            return false;
    }
    return false;
}

PassageTable passage_time(const FieldBlock& field, Point origin, Point target, bool keep_values) {
    if (!leq(origin, target)) throw std::domain_error("passage_time: origin must be <= target");
    const Rect r(origin, target);
    if (!field.region().contains(origin) || !field.region().contains(target)) {
        throw std::out_of_range("passage_time: table region not inside field");
    }
    PassageTable tab;
    tab.kind = PassageTable::Kind::plain;
    tab.origin = origin;
    tab.region = r;
    tab.dirs = DirGrid(r);
    tab.has_values = keep_values;
    if (keep_values) tab.values.resize(r.size());

    std::vector<double> row(static_cast<std::size_t>(r.height()));
    for (std::int64_t x1 = origin.x1; x1 <= target.x1; ++x1) {
        for (std::int64_t x2 = origin.x2; x2 <= target.x2; ++x2) {
            const Point p{x1, x2};
            const std::size_t j = static_cast<std::size_t>(x2 - origin.x2);
            const double w = field.at(p);
            double g;
            Pred d;
            if (x1 == origin.x1 && x2 == origin.x2) {
                g = w;
                d = Pred::none;
            } else if (x1 == origin.x1) {
                g = row[j - 1] + w;
                d = Pred::from_e2;
            } else if (x2 == origin.x2) {
                g = row[j] + w;
                d = Pred::from_e1;
            } else {
                const double a = row[j];      // G(x - e1)
                const double b = row[j - 1];  // G(x - e2)
                if (b >= a) {                 // tie toward e2
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

PassageTable passage_time(const WeightField& field, Point origin, Point target, bool keep_values) {
    return passage_time(FieldBlock(field, Rect(origin, target)), origin, target, keep_values);
}

GeodesicPath backtrack_geodesic(const PassageTable& table, Point endpoint) {
    if (!table.region.contains(endpoint)) throw std::domain_error("backtrack_geodesic: endpoint outside table");
    if (table.pred_at(endpoint) == Pred::none && !(endpoint == table.origin) &&
        table.kind != PassageTable::Kind::line_to_point) {
        throw std::domain_error("backtrack_geodesic: endpoint unreachable");
    }
    GeodesicPath path;
    Point p = endpoint;
    path.sites.push_back(p);
    while (table.step_back(p)) path.sites.push_back(p);
    std::reverse(path.sites.begin(), path.sites.end());

    switch (table.kind) {
        case PassageTable::Kind::plain:
            path.boundary_prefix = 0;
            break;
        case PassageTable::Kind::stationary: {
            std::size_t n = 0;
            while (n < path.sites.size() &&
                   (path.sites[n].x1 == table.origin.x1 || path.sites[n].x2 == table.origin.x2)) {
                ++n;
            }
            path.boundary_prefix = n;
            break;
        }
        case PassageTable::Kind::line_to_point:
            path.boundary_prefix = 1;  // the antidiagonal start site
            break;
    }
    path.total_weight =
        table.has_values ? table.value_at(endpoint) : std::numeric_limits<double>::quiet_NaN();
    return path;
}

LevelCut::LevelCut(const PassageTable& table, std::int64_t cut_level)
    : table_(table), cut_(cut_level), span_(table.region.width()) {
    const std::int64_t max_level = level(table.region.hi);
    if (cut_ > max_level) throw std::invalid_argument("LevelCut: cut level above table");
    memo_.assign(static_cast<std::size_t>((max_level - cut_ + 1) * span_), -1);
}

std::int64_t LevelCut::x1_at_cut(Point endpoint) {
    if (level(endpoint) < cut_) throw std::domain_error("LevelCut: endpoint below cut level");
    scratch_.clear();
    Point p = endpoint;
    std::int64_t result = -1;
    while (true) {
        if (level(p) == cut_) {
            result = p.x1;
            break;
        }
        const std::size_t idx = static_cast<std::size_t>((level(p) - cut_) * span_ + (p.x1 - table_.region.lo.x1));
        if (memo_[idx] >= 0) {
            result = memo_[idx] + table_.region.lo.x1;
            break;
        }
        scratch_.push_back(static_cast<std::int64_t>(idx));
        if (!table_.step_back(p)) throw std::logic_error("LevelCut: path start above cut level");
    }
    for (std::int64_t idx : scratch_) {
        memo_[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(result - table_.region.lo.x1);
    }
    return result;
}

}  // namespace lpp
