#ifndef PRANDTL_RNG_HPP
#define PRANDTL_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

// Counter-based random numbers (Philox4x32-10, Salmon et al. SC 2011).
// Every draw is a pure function of (seed, path, step, mode, slot), so
// ensembles are bitwise reproducible no matter how paths are scheduled
// across threads.

namespace prandtl {

namespace detail {

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         const std::array<std::uint32_t, 2>& key) {
    constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

} // namespace detail

inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        detail::philox_round(ctr, key);
        key[0] += W0;
        key[1] += W1;
    }
    return ctr;
}

// Identifies one random block. `slot` separates independent draws that share
// (path, step, mode), e.g. the Gaussian increment and the bridge uniform.
struct DrawKey {
    std::uint64_t seed = 0;
    std::uint64_t path = 0;
    std::uint64_t step = 0;
    std::uint32_t mode = 0;
    std::uint32_t slot = 0;
};

inline std::array<std::uint32_t, 4> philox_block(const DrawKey& k) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(k.step),
        static_cast<std::uint32_t>(k.step >> 32) ^ static_cast<std::uint32_t>(k.path >> 32),
        static_cast<std::uint32_t>(k.path),
        (k.mode << 8) ^ k.slot};
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(k.seed),
        static_cast<std::uint32_t>(k.seed >> 32)};
    return philox4x32(ctr, key);
}

// Uniform on (0,1], 53-bit resolution.
inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1p-53;
}

inline double keyed_uniform(const DrawKey& k) {
    const auto r = philox_block(k);
    return to_unit(r[0], r[1]);
}

// Standard normal via Box-Muller on one Philox block.
inline double keyed_gaussian(const DrawKey& k) {
    const auto r = philox_block(k);
    const double u1 = to_unit(r[0], r[1]);
    const double u2 = to_unit(r[2], r[3]);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

} // namespace prandtl

#endif
