#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpp/lattice.hpp"
#include "lpp/path.hpp"
#include "lpp/weight_field.hpp"

namespace lpp {

// Predecessor of a site on the argmax path.
enum class Pred : std::uint8_t {
    none = 0,      // path start / unreachable site
    from_e1 = 1,   // predecessor is x - e1
    from_e2 = 2,   // predecessor is x - e2
    boundary = 3,  // site sits on a weightless boundary (stationary axes)
};

// 2 bits per site, packed.
class DirGrid {
  public:
    explicit DirGrid(Rect region)
        : region_(region), words_((region.size() + 31) / 32, 0) {}

    Pred at(Point p) const {
        const std::size_t i = region_.index(p);
        return static_cast<Pred>((words_[i >> 5] >> ((i & 31) * 2)) & 3u);
    }
    void set(Point p, Pred d) {
        const std::size_t i = region_.index(p);
        const unsigned sh = (i & 31) * 2;
        std::uint64_t& w = words_[i >> 5];
        w = (w & ~(std::uint64_t{3} << sh)) | (static_cast<std::uint64_t>(d) << sh);
    }
    const Rect& region() const { return region_; }

  private:
    Rect region_;
    std::vector<std::uint64_t> words_;
};

// Output of a last-passage DP: per-site predecessor flags always, per-site
// values only when requested.  Completed tables are immutable and safe to
// share across threads.  Whole-cylinder experiments keep flags only
// (2 bits/site); value queries then throw.
struct PassageTable {
    enum class Kind { plain, stationary, line_to_point };

    Kind kind = Kind::plain;
    Point origin{};  // plain: start site; stationary: base point o; line_to_point: unused
    Rect region{};
    DirGrid dirs{Rect{}};
    bool has_values = false;
    std::vector<double> values;

    double value_at(Point p) const;
    Pred pred_at(Point p) const { return dirs.at(p); }
    // One backtracking step; false at the absolute path start.
    bool step_back(Point& p) const;
};

// Point-to-point last passage time over [origin, target]; ties broken toward e2.
PassageTable passage_time(const FieldBlock& field, Point origin, Point target, bool keep_values = true);
PassageTable passage_time(const WeightField& field, Point origin, Point target, bool keep_values = true);

// Argmax path reconstruction from the predecessor flags.
// total_weight is the table value at the endpoint (NaN for flags-only tables).
GeodesicPath backtrack_geodesic(const PassageTable& table, Point endpoint);

// Memoized queries of "x1 of the path site at a fixed antidiagonal level",
// shared across many endpoints backtracked against one table.
class LevelCut {
  public:
    LevelCut(const PassageTable& table, std::int64_t cut_level);
    // x1-coordinate of the unique site at cut level on the path to endpoint.
    std::int64_t x1_at_cut(Point endpoint);

  private:
    const PassageTable& table_;
    std::int64_t cut_;
    std::int64_t span_;
    std::vector<std::int64_t> scratch_;
    std::vector<std::int32_t> memo_;  // per band site: x1 at cut, or -1
};

}  // namespace lpp
