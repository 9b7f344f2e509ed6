// bounds.hpp: closed-form evaluation of the displayed asymptotic bounds.
//
// Conventions, fixed once for the whole artifact: every O(.) constant is 1,
// logarithms are base 2, log n is replaced by 1 when n <= 2, and a
// "log suppressed" mode forces every log factor to 1 for clean formula
// tests. Values are evaluated in double; they are report baselines, never
// inputs to a count.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigrid/scalar.hpp"

namespace trigrid {

struct BoundInput {
    std::uint64_t n = 4;           // grid size |A| * |B|
    Scalar d_a = 1;                // calibrated d(A)
    Scalar d_b = 1;                // calibrated d(B)
    bool log_suppressed = false;

    // The theorem statements assume d(A) <= d(B); normalize() swaps if needed.
    void normalize();
    double log_n() const;          // log2(n), floored at 1 for n <= 2
};

struct FiveTermBound {
    // t1 = d^2(A) d(B) n^{7/2} log n / k^5
    // t2 = (d(A)^{4/3} + d(B)^{4/3}) n^{5/2} log^{2/3} n / k^{5/3}
    // t3 = (d^2(A) + d^2(B)) n^2 log n / k^2
    // t4 = n^2 k^{2/3}
    // t5 = n^{3/2} k log k
    double t1 = 0, t2 = 0, t3 = 0, t4 = 0, t5 = 0;
    std::int64_t k = 1;
    double total() const { return t1 + t2 + t3 + t4 + t5; }
};

FiveTermBound five_term_bound(const BoundInput& input, std::int64_t k);

struct OptimalK {
    std::int64_t k_formula = 1;  // floor of n^{9/34} (d^2(A) d(B) log n)^{3/17}, min 1
    std::int64_t k_search = 1;   // argmin of the five-term total over k in [1, n]
    double total_formula = 0;
    double total_search = 0;
};

// The five-term total is a sum of functions convex in log k, hence unimodal
// over integer k; the argmin is found by binary search on the discrete
// difference, ties broken toward smaller k.
OptimalK optimal_k(const BoundInput& input);

// n^{37/17} (d^2(A) d(B) log n)^{2/17}; with d(A) = d(B) = 1 this is the
// convex-grid form n^{37/17} log^{2/17} n.
double theorem_bound(const BoundInput& input);

// d(A) <= d(B) <= n^{6/47} d(A)^{42/47} (log n)^{-13/47}.
bool hypothesis_check(const BoundInput& input);

struct ReferenceExponent {
    std::string name;
    Scalar exponent;
};

// {general: 20/9, convex: 37/17, prior-convex: 31/14}.
std::vector<ReferenceExponent> reference_exponents();

}  // namespace trigrid
