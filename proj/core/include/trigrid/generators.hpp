// generators.hpp: deterministic ground-set generators.
//
// Every generator is a pure function of (spec, m, seed); experiment
// manifests record all three, so any produced set can be rebuilt bit-for-bit.
// The PRNG is mt19937_64 seeded directly with the manifest seed, with
// rejection sampling for bounded draws (no distribution objects, whose
// output is implementation-defined).
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "trigrid/ground_set.hpp"

namespace trigrid {

inline constexpr const char* kRngAlgorithm = "mt19937_64";

enum class GeneratorKind {
    Squares,        // {i^2 : 0 <= i < m}
    PolyConvex,     // p(i) for rational coefficients, validated convex
    RandomConvex,   // strictly increasing random gaps
    Geometric,      // {r^i : 0 <= i < m}, rational ratio r > 1
    Arithmetic,     // {start + i*step}
    UniformRandom,  // m distinct uniform integers in [0, 16 m^2)
};

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Squares;
    std::vector<Scalar> coefficients;  // PolyConvex: highest degree first
    Scalar ratio = 2;                  // Geometric
    Scalar start = 0;                  // Arithmetic
    Scalar step = 1;                   // Arithmetic

    // Grammar: "squares" | "poly:c_d,...,c_0" | "random-convex" |
    // "geometric:p/q" | "arithmetic:start,step" | "uniform-random".
    static GeneratorSpec parse(const std::string& text);
    std::string to_string() const;
};

GroundSet gen_set(const GeneratorSpec& spec, std::size_t m, std::uint64_t seed);

// Uniform draw in [0, bound) from raw engine output via rejection; identical
// on every platform for a given seed sequence.
std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace trigrid
