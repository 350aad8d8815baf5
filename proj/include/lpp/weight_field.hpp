#pragma once

#include <vector>

#include "lpp/lattice.hpp"
#include "lpp/rng.hpp"

namespace lpp {

// Seeded i.i.d. Exp(1) environment over a lattice rectangle.  A weight is a
// pure function of (stream, absolute site), so fields with different regions
// but the same stream agree on the overlap, and re-queries are bit-identical.
class WeightField {
  public:
    WeightField(RngStream stream, Rect region);

    double weight_at(Point site) const;
    const Rect& region() const { return region_; }
    const RngStream& stream() const { return stream_; }

    static std::uint64_t site_counter(Point site);

  private:
    RngStream stream_;
    Rect region_;
};

// Dense copy of a field over a rectangle; values bit-identical to weight_at.
// Used by the DP kernels to avoid re-hashing sites shared across tables.
class FieldBlock {
  public:
    FieldBlock(const WeightField& field, Rect region);
    static FieldBlock from_values(Rect region, std::vector<double> values);

    double at(Point site) const { return values_[region_.index(site)]; }
    const Rect& region() const { return region_; }

  private:
    FieldBlock() = default;
    Rect region_;
    std::vector<double> values_;
};

}  // namespace lpp
