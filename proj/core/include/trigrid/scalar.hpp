// scalar.hpp: exact arithmetic base layer.
//
// Every number that enters a count is an exact rational (Scalar) or an
// arbitrary-precision integer (BigInt). There is no floating point anywhere
// in the counting pipeline; doubles appear only when evaluating asymptotic
// bound formulas for reports.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "trigrid/errors.hpp"

namespace trigrid {

using BigInt = boost::multiprecision::cpp_int;

// Canonical exact rational: gcd(|num|, den) = 1, den > 0. Both invariants
// are maintained by the underlying boost type on every operation.
using Scalar = boost::multiprecision::cpp_rational;

// Makes num/den canonical regardless of the sign of den. The raw two-arg
// cpp_rational constructor rejects negative denominators.
inline Scalar make_scalar(BigInt num, BigInt den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(std::move(num), std::move(den));
}

// Parses "p/q" or "p" (optional leading '-'). Whitespace is not accepted;
// callers strip it. Throws InputError on anything else, including q = 0.
Scalar parse_scalar(std::string_view text);

// Emits "p/q", or just "p" when the denominator is 1. Round-trips through
// parse_scalar exactly.
std::string format_scalar(const Scalar& value);

inline double to_double(const Scalar& value) { return value.convert_to<double>(); }

inline double to_double(const BigInt& value) { return value.convert_to<double>(); }

// 64-bit mix used by the hashed containers for difference keys.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Int64PairHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& p) const {
        std::uint64_t a = mix64(static_cast<std::uint64_t>(p.first));
        std::uint64_t b = mix64(static_cast<std::uint64_t>(p.second) + 0x517cc1b727220a95ull);
        return static_cast<std::size_t>(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
    }
};

}  // namespace trigrid
