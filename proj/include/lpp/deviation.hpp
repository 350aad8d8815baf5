#pragma once

#include <cstdint>
#include <vector>

#include "lpp/path.hpp"

namespace lpp {

// Column extremes of a path against the line of slope xi2/xi1:
// upper_k = max{l : (k,l) on path}, lower_k = min, and
// dev_k = max(|upper_k - (xi2/xi1) k|, |lower_k - (xi2/xi1) k|).
struct DeviationProfile {
    std::int64_t col_begin = 0;
    std::vector<std::int64_t> upper;
    std::vector<std::int64_t> lower;
    std::vector<double> dev;

    std::size_t columns() const { return dev.size(); }
    double dev_at(std::int64_t k) const { return dev[static_cast<std::size_t>(k - col_begin)]; }
};

DeviationProfile deviation_profile(const GeodesicPath& path, double xi1, double xi2);

}  // namespace lpp
