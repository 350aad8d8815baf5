#include "lpp/weight_field.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lpp {

namespace {
// Zig-zag so negative coordinates get distinct counters.
inline std::uint64_t zigzag32(std::int64_t v) {
    const std::uint64_t z = (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
    if (z >> 32) throw std::out_of_range("WeightField: coordinate out of the 32-bit site range");
    return z;
}
}  // namespace

WeightField::WeightField(RngStream stream, Rect region)
    : stream_(stream.derive("bulk")), region_(region) {}

std::uint64_t WeightField::site_counter(Point site) {
    return (zigzag32(site.x1) << 32) | zigzag32(site.x2);
}

double WeightField::weight_at(Point site) const {
    if (!region_.contains(site)) {
        throw std::out_of_range("WeightField::weight_at: site " + to_string(site) + " outside region");
    }
    return stream_.exponential(1.0, site_counter(site));
}

FieldBlock FieldBlock::from_values(Rect region, std::vector<double> values) {
    if (values.size() != region.size()) throw std::invalid_argument("FieldBlock::from_values: size mismatch");
    FieldBlock b;
    b.region_ = region;
    b.values_ = std::move(values);
    return b;
}

FieldBlock::FieldBlock(const WeightField& field, Rect region) : region_(region) {
    if (!field.region().contains(region.lo) || !field.region().contains(region.hi)) {
        throw std::out_of_range("FieldBlock: block not contained in field region");
    }
    values_.resize(region.size());
    for (std::int64_t x1 = region.lo.x1; x1 <= region.hi.x1; ++x1) {
        for (std::int64_t x2 = region.lo.x2; x2 <= region.hi.x2; ++x2) {
            const Point p{x1, x2};
            values_[region.index(p)] = field.weight_at(p);
        }
    }
}

}  // namespace lpp
