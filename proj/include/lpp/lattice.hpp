#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpp {

// Lattice site. e1 = (1,0), e2 = (0,1); spatial frame e3 = (1,-1), e4 = (1,1).
struct Point {
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;

    friend bool operator==(Point a, Point b) { return a.x1 == b.x1 && a.x2 == b.x2; }
    friend bool operator!=(Point a, Point b) { return !(a == b); }
    friend Point operator+(Point a, Point b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
    friend Point operator-(Point a, Point b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
};

inline constexpr Point e1{1, 0};
inline constexpr Point e2{0, 1};

// Antidiagonal level x1+x2 (the time direction counts two per e4 step).
inline std::int64_t level(Point p) { return p.x1 + p.x2; }
// Signed offset along e3 within a level.
inline std::int64_t antidiag_offset(Point p) { return p.x1 - p.x2; }

// Space-time frame: site = i*e4 + j*e3 with integer (i, j).
inline Point from_spacetime(std::int64_t i, std::int64_t j) { return {i + j, i - j}; }

// Lattice partial order <= : b up-right of a.
inline bool leq(Point a, Point b) { return a.x1 <= b.x1 && a.x2 <= b.x2; }
// Down-right partial order: b to the right and below a.
inline bool before(Point a, Point b) { return a.x1 <= b.x1 && a.x2 >= b.x2; }

// Closed axis-aligned box [lo, hi].
struct Rect {
    Point lo;
    Point hi;

    Rect() = default;
    Rect(Point lo_, Point hi_) : lo(lo_), hi(hi_) {
        if (!leq(lo, hi)) throw std::invalid_argument("Rect: lo must be <= hi");
    }
    bool contains(Point p) const { return leq(lo, p) && leq(p, hi); }
    std::int64_t width() const { return hi.x1 - lo.x1 + 1; }
    std::int64_t height() const { return hi.x2 - lo.x2 + 1; }
    std::size_t size() const { return static_cast<std::size_t>(width()) * static_cast<std::size_t>(height()); }
    std::size_t index(Point p) const {
        return static_cast<std::size_t>(p.x1 - lo.x1) * static_cast<std::size_t>(height()) +
               static_cast<std::size_t>(p.x2 - lo.x2);
    }
};

inline std::string to_string(Point p) {
    return "(" + std::to_string(p.x1) + "," + std::to_string(p.x2) + ")";
}

}  // namespace lpp
