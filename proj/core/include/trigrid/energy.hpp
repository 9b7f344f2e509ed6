// energy.hpp: additive energies over shifted intersections.
//
// A_x = A n (A - x) has |A_x| = delta_{A,A}(x), so E_k(A) = sum_x |A_x|^k is
// a moment of the self-difference profile. The tuple forms
//   E_k(A)     = sum over (k-1)-tuples xvec of |A_xvec|^2
//   E_{k,l}(A) = sum over (k-1)-tuples xvec of |A_xvec|^l
// are computed by recursive intersection refinement over tuples with
// nonempty A_xvec only; the two routes for E_k must agree exactly and that
// identity is part of the test suite.
#pragma once

#include <cstdint>
#include <vector>

#include "trigrid/ground_set.hpp"
#include "trigrid/report.hpp"

namespace trigrid {

// Orders above this default are refused: the tuple enumeration is
// O(|A-A|^{k-1}) in the worst case. Raise explicitly if you mean it.
inline constexpr int kDefaultMaxEnergyOrder = 6;

struct ShiftVector {
    std::vector<Scalar> components;  // (x_1, ..., x_{k-1}), length >= 1
};

struct EnergyValue {
    BigInt value;
    int k = 2;
    int l = 2;
};

// A n (A - x_1) n ... n (A - x_{k-1}); may be empty (returned as a sorted
// vector rather than a GroundSet, which is never empty).
std::vector<Scalar> shifted_intersection(const GroundSet& a, const ShiftVector& xs);

// E_k via the difference profile: sum_s delta(s)^k.
EnergyValue energy_k(const GroundSet& a, int k, int max_order = kDefaultMaxEnergyOrder);

// E_k via the tuple definition; must equal energy_k(a, k).
EnergyValue energy_k_tuple(const GroundSet& a, int k, int max_order = kDefaultMaxEnergyOrder);

// E_{k,l}: tuple enumeration to depth k-1, exponent l. Symmetric in (k,l).
EnergyValue energy_kl(const GroundSet& a, int k, int l, int max_order = kDefaultMaxEnergyOrder);

// Number of tuples (a_1,...,a_m) in A^m with |(A-a_1) n ... n (A-a_m)| >= tau.
// Note the intersection does not include a bare copy of A, so every diagonal
// tuple (a,...,a) attains |A - a| = |A|.
std::int64_t rich_tuple_count(const GroundSet& a, int m, std::int64_t tau,
                              int max_order = kDefaultMaxEnergyOrder);

// The rich-tuple inequality with the universal parameter d = |A|:
//   rich_tuple_count(A,m,tau) <= |A|^2 E_{m-1,3}(A) / tau^3.
// This is constant-free and exact; a violation is a bug, so the returned
// row is ASSERTED-EXACT and the comparison throws TheoremViolation on
// failure.
RatioRow verify_rich_tuple_bound(const GroundSet& a, int m, std::int64_t tau,
                                 int max_order = kDefaultMaxEnergyOrder);

}  // namespace trigrid
