#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace lpp {

// Philox4x32-10 block: 128-bit counter, 64-bit key -> 128 output bits.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

// Counter-based stream keyed by (master seed, ordered label path).  The value
// at a given counter is a pure function of (seed, labels, counter), so fields
// can be evaluated lazily, out of order, and concurrently with identical
// results.  Derivation with distinct labels separates counter spaces.
class RngStream {
  public:
    explicit RngStream(std::uint64_t master_seed);

    RngStream derive(std::string_view label) const;
    RngStream derive(std::uint64_t label) const;

    // Uniform on the open interval (0,1); never returns 0 or 1 exactly.
    double uniform(std::uint64_t counter) const;
    std::uint64_t bits(std::uint64_t counter) const;
    // Exp(rate) by inverse CDF; strictly positive and finite.
    double exponential(double rate, std::uint64_t counter) const;

    std::uint64_t master_seed() const { return master_seed_; }

  private:
    std::uint64_t master_seed_ = 0;
    std::uint64_t id_lo_ = 0;  // label-path digest, first half
    std::uint64_t id_hi_ = 0;  // label-path digest, second half
};

// Inverse-CDF map u -> -ln(u)/rate, exposed for boundary-value tests.
double exponential_from_uniform(double u, double rate);

// Spec-level aliases for the stream operations.
inline RngStream derive_stream(const RngStream& parent, std::string_view label) { return parent.derive(label); }
inline RngStream derive_stream(const RngStream& parent, std::uint64_t label) { return parent.derive(label); }
inline double sample_exponential(const RngStream& s, double rate, std::uint64_t counter) {
    return s.exponential(rate, counter);
}

}  // namespace lpp
