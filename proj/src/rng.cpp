#include "lpp/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lpp {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

// SplitMix64 finalizer; used to absorb labels into the stream id.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_label(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a 64 over the bytes
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001B3ull;
    }
    return mix64(h);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> c = counter;
    std::array<std::uint32_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kPhiloxW0;
            k[1] += kPhiloxW1;
        }
        philox_round(c, k);
    }
    return c;
}

RngStream::RngStream(std::uint64_t master_seed)
    : master_seed_(master_seed),
      id_lo_(mix64(master_seed ^ 0x517CC1B727220A95ull)),
      id_hi_(mix64(master_seed ^ 0x2545F4914F6CDD1Dull)) {}

RngStream RngStream::derive(std::string_view label) const {
    RngStream child = *this;
    const std::uint64_t h = hash_label(label);
    child.id_lo_ = mix64(id_lo_ ^ h ^ 0x01ull);
    child.id_hi_ = mix64(id_hi_ ^ h ^ 0x9E3779B97F4A7C15ull);
    return child;
}

RngStream RngStream::derive(std::uint64_t label) const {
    RngStream child = *this;
    const std::uint64_t h = mix64(label ^ 0xA0761D6478BD642Full);
    child.id_lo_ = mix64(id_lo_ ^ h ^ 0x02ull);
    child.id_hi_ = mix64(id_hi_ ^ h ^ 0xE7037ED1A0B428DBull);
    return child;
}

std::uint64_t RngStream::bits(std::uint64_t counter) const {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(counter),
        static_cast<std::uint32_t>(counter >> 32),
        static_cast<std::uint32_t>(id_hi_),
        static_cast<std::uint32_t>(id_hi_ >> 32),
    };
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(id_lo_),
        static_cast<std::uint32_t>(id_lo_ >> 32),
    };
    const auto out = philox4x32(ctr, key);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

double RngStream::uniform(std::uint64_t counter) const {
    // 53-bit mantissa shifted by half a ulp keeps the value strictly inside (0,1).
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential(double rate, std::uint64_t counter) const {
    return exponential_from_uniform(uniform(counter), rate);
}

double exponential_from_uniform(double u, double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exponential_from_uniform: rate must be positive");
    if (!(u > 0.0) || !(u < 1.0)) throw std::invalid_argument("exponential_from_uniform: u must lie in (0,1)");
    return -std::log(u) / rate;
}

}  // namespace lpp
