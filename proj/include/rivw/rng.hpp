#pragma once

#include <cstdint>
#include <span>

namespace rivw::rng {

// Counter-based RNG: every draw is a pure function of
// (seed, replicate, unit, role). There is no mutable generator state, so
// draws are replayable and independent of evaluation order or thread count.
//
// The core is the SplitMix64 finalizer applied as a keyed hash; keys are
// derived by chaining the finalizer over the index tuple, which gives three
// full mixing rounds between the structured counter bits and the output.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Per-replicate root key.
inline constexpr std::uint64_t rep_key(std::uint64_t seed, std::uint64_t rep) {
    return mix64(seed + kGolden * (rep + 1));
}

// Per-unit key (a unit is a SNP in the simulator, a draw index in the
// Monte Carlo oracles).
inline constexpr std::uint64_t unit_key(std::uint64_t rep_key, std::uint64_t unit) {
    return mix64(rep_key + kGolden * (unit + 1));
}

inline constexpr std::uint64_t draw_bits(std::uint64_t unit_key, std::uint64_t role) {
    return mix64(unit_key + kGolden * (role + 1));
}

// Map 64 bits to the open interval (0, 1): 53-bit mantissa, offset by half
// an ulp so 0 and 1 are unreachable.
inline constexpr double unit_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

inline double uniform(std::uint64_t unit_key, std::uint64_t role) {
    return unit_from_bits(draw_bits(unit_key, role));
}

// Roles used by the simulator; oracles reuse the same slots.
enum class Role : std::uint64_t {
    mixture_component = 0,
    gamma_effect      = 1,
    alpha_effect      = 2,
    exposure_noise    = 3,
    outcome_noise     = 4,
    selection_noise   = 5,
    third_sample_noise = 6,
};

inline std::uint64_t draw_bits(std::uint64_t unit_key, Role role) {
    return draw_bits(unit_key, static_cast<std::uint64_t>(role));
}

inline double uniform(std::uint64_t unit_key, Role role) {
    return uniform(unit_key, static_cast<std::uint64_t>(role));
}

}  // namespace rivw::rng
