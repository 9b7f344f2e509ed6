// grid.hpp: the grid A x B, its plane family, and the exact triangle counters.
//
// A triple p = (a,b,c) in A^3 determines the plane
//     (c-b) x + (a-c) y + (b-a) z = 2s
// whose solutions (x,y,z) in B^3 are exactly the vertex orderings
// ((a,x),(b,y),(c,z)) of positively-oriented triangles of area s. Triples on
// the main diagonal give the empty condition 0 = 2s and span no triangle.
// Two triples give the same plane iff they differ by a multiple of (1,1,1);
// the class is keyed by the difference pair (b-a, c-a) and its size is the
// plane multiplicity w.
//
// Counting routes:
//   * brute force: all unordered point triples, O(N^3), the oracle;
//   * incidence: per distinct plane, solve for y over (z,x) in B^2 with a
//     membership lookup, weight by w, O(|A|^3 |B|^2); the ordered solution
//     count is exactly 3x the triangle count.
// Both run on machine integers after clearing denominators (int64, then
// __int128, then arbitrary precision, picked by magnitude).
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trigrid/ground_set.hpp"
#include "trigrid/incidence.hpp"

namespace trigrid {

struct Point2 {
    Scalar x;
    Scalar y;
};

struct Grid {
    GroundSet a;
    GroundSet b;
    Scalar target_area = 1;

    Grid(GroundSet a_, GroundSet b_, Scalar area = Scalar(1))
        : a(std::move(a_)), b(std::move(b_)), target_area(std::move(area)) {
        if (target_area <= 0) throw DomainError("target area must be positive");
    }

    std::size_t n() const { return a.size() * b.size(); }
};

struct Triple {
    Scalar a;
    Scalar b;
    Scalar c;
};

struct PlaneH {
    Scalar alpha;  // c - b
    Scalar beta;   // a - c
    Scalar gamma;  // b - a
    Scalar rhs;    // 2 * target area
    std::pair<Scalar, Scalar> key;  // (b - a, c - a), the diagonal-shift class
    std::int64_t w = 1;
    bool degenerate = false;  // a = b = c: no plane
};

struct DecompositionCounts {
    std::int64_t rr = 0;
    std::int64_t rp = 0;
    std::int64_t pr = 0;
    std::int64_t pp = 0;
    std::int64_t total = 0;
    std::int64_t k = 1;
};

struct CountOptions {
    std::size_t bruteforce_guard = 1500;                  // max |A|*|B| points
    std::uint64_t incidence_guard = std::uint64_t{1} << 33;  // max |A|^3 |B|^2
    bool override_guard = false;
    int jobs = 1;
};

struct OrderedCount {
    std::int64_t ordered = 0;    // solutions ((a,b,c),(x,y,z)), plane multiplicity included
    std::int64_t triangles = 0;  // = ordered / 3, divisibility asserted
};

// Twice the signed area of (p1,p2,p3); 0 iff collinear or degenerate.
Scalar triangle_area2(const Point2& p1, const Point2& p2, const Point2& p3);

// Exact count of unordered 3-subsets of the grid with |area2| = 2s.
std::int64_t count_unit_triangles_bruteforce(const Grid& grid, const CountOptions& opts = {});

// Ordered plane-equation solutions and the derived triangle count.
OrderedCount count_ordered_solutions(const Grid& grid, const CountOptions& opts = {});

// The incidence-route triangle count; must equal the brute-force count.
std::int64_t count_unit_triangles_incidence(const Grid& grid, const CountOptions& opts = {});

// Triangles in which (at least) two vertices share an abscissa, counted
// within the same pipeline (their plane classes satisfy d1 = 0, d2 = 0, or
// d1 = d2). Reported separately next to the rich-rich bound's n^2 term.
std::int64_t count_equal_abscissa_triangles(const Grid& grid, const CountOptions& opts = {});

// The plane of a triple, canonicalized by the (b-a, c-a) key. Diagonal
// triples yield degenerate = true.
PlaneH plane_of(const Triple& p, const Scalar& target_area);

// w(p) = |(p + (1,1,1)R) n X^3| = |(X-a) n (X-b) n (X-c)|; >= 1 whenever
// the coordinates lie in X (t = 0 qualifies), and permutation-invariant.
std::int64_t multiplicity(const Triple& p, const GroundSet& x);

struct RichPointsResult {
    std::int64_t count = 0;
    std::optional<std::vector<Triple>> points;  // filled when enumerate = true
};

// Number of triples in X^3 with multiplicity >= k.
RichPointsResult rich_points(const GroundSet& x, std::int64_t k, bool enumerate = false);

// |{(p1,p2) : (p1,p2,p3) is k-rich for some p3}| - the xy-projection count.
std::int64_t project_rich(const GroundSet& x, std::int64_t k);

// Every unit-area triangle assigned to rich-rich / rich-poor / poor-rich /
// poor-poor by the multiplicities of its A-triple and B-triple.
// rr + rp + pr + pp = total = unit-area triangle count, exactly.
DecompositionCounts classify_triangles(const Grid& grid, std::int64_t k,
                                       const CountOptions& opts = {});

// All distinct nondegenerate planes with multiplicities, sorted by key.
std::vector<PlaneH> distinct_planes(const Grid& grid);

struct DyadicClass {
    int i = 1;                 // 2^{i-1} <= w < 2^i
    std::int64_t plane_count = 0;
    BigInt weight_sum;         // sum of w over the class
    Scalar trivial_bound;      // |A|^3 / 2^{i-1}, an exact theorem bound
};

// Partition of the k-poor distinct planes into dyadic multiplicity classes
// i = 1..ceil(log2 k). Asserts |H_i| <= |A|^3 / 2^{i-1} exactly.
std::vector<DyadicClass> dyadic_plane_classes(const Grid& grid, std::int64_t k);

// Restriction of each plane to the horizontal slice z = z0 (z0 in B):
// the line alpha x + beta y = rhs - gamma z0, weight preserved. Distinct
// planes yield distinct lines; violation throws TheoremViolation.
std::vector<PlanarLine> slice_lines(const Grid& grid, const Scalar& z0,
                                    const std::vector<PlaneH>& planes);

struct EtaProjectionResult {
    std::vector<PlanarPoint> points;
    std::vector<PlanarLine> lines;
};

// Orthogonal projection onto eta = {x + y + z = 1} in the exact chart
// (u, v) = (x - y, x + y - 2z). A point triple maps to (u, v) with its
// multiplicity; a plane maps to the line (alpha - beta) u - gamma v = 4s.
// Incidences are preserved exactly, and distinct planes map to distinct
// lines (asserted).
EtaProjectionResult eta_projection(const std::vector<std::pair<Triple, std::int64_t>>& points,
                                   const std::vector<PlaneH>& planes, const Scalar& target_area);

}  // namespace trigrid
