// incidence.hpp: exact planar point-line incidence machinery.
//
// Lines are canonicalized to coprime integer coefficients with a fixed sign
// convention, so equality of geometric lines is equality of keys. All
// incidence counts are exact; the Szemeredi--Trotter expression is evaluated
// only as a reporting baseline and never used to produce a count.
#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "trigrid/ground_set.hpp"

namespace trigrid {

struct PlanarPoint {
    Scalar x;
    Scalar y;
    std::int64_t weight = 1;
};

class PlanarLine {
public:
    // Line a*x + b*y = c from exact rational coefficients; (a,b) != (0,0).
    // Canonical form: integer coefficients, gcd(a,b,c) = 1, first nonzero of
    // (a,b) positive.
    static PlanarLine from_coefficients(const Scalar& a, const Scalar& b, const Scalar& c,
                                        std::int64_t weight = 1);
    static PlanarLine through(const PlanarPoint& p, const PlanarPoint& q, std::int64_t weight = 1);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    std::int64_t weight() const { return weight_; }
    void set_weight(std::int64_t w) { weight_ = w; }

    bool contains(const PlanarPoint& p) const;

    auto key() const { return std::tie(a_, b_, c_); }
    bool operator==(const PlanarLine& o) const { return key() == o.key(); }
    bool operator<(const PlanarLine& o) const { return key() < o.key(); }

private:
    BigInt a_, b_, c_;
    std::int64_t weight_ = 1;
};

// Exact number of incident (point, line) pairs; with weighted = true each
// pair contributes weight(p) * weight(l). Inputs must be duplicate-free
// under canonical keys (InputError otherwise). The counter groups points by
// x-coordinate and solves each line for y per column, so the cost is
// O(#lines * #distinct-x + #points) instead of O(#points * #lines).
BigInt count_incidences(std::span<const PlanarPoint> points, std::span<const PlanarLine> lines,
                        bool weighted);

struct RichLine {
    PlanarLine line;
    std::int64_t point_count = 0;
};

// Distinct lines spanned by at least k (>= 2) of the points, found by
// grouping point pairs by canonical line key. Point count per line is
// recovered from its pair count.
std::vector<RichLine> rich_lines(std::span<const PlanarPoint> points, std::int64_t k);

// Number of points (a,b) in X^2 whose slope-1 line (a,b) + (1,1)R contains
// at least k points of X^2. Equals the sum of delta_{X,X}(s) over
// differences with delta >= k.
std::int64_t fixed_direction_rich_count(const GroundSet& x, std::int64_t k);

// M^{2/3} N^{2/3} + M + N with constant 1. Exact (an integer held in a
// double) whenever M*N is a perfect cube; otherwise a double approximation.
// The general value is irrational, so no exact rational type can hold it.
double st_bound(std::int64_t m, std::int64_t n);

}  // namespace trigrid
