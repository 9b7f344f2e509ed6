#include "trigrid/grid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace trigrid {

namespace {

// ---------------------------------------------------------------------------
// Scaled integer views and kernel width selection.
//
// Clearing denominators turns the area condition into an integer equation:
// with A' = scaleA * A, B' = scaleB * B the determinant scales by
// scaleA * scaleB, so the target becomes T = 2 s scaleA scaleB. If T is not
// an integer there are no solutions at all.
// ---------------------------------------------------------------------------

struct ScaledGrid {
    std::vector<BigInt> av;
    std::vector<BigInt> bv;
    BigInt target;        // valid iff integral
    bool integral = false;
    BigInt max_abs = 0;   // over both value sets
};

ScaledGrid scale_grid(const Grid& grid) {
    ScaledGrid s;
    BigIntView va = integerize_big(grid.a);
    BigIntView vb = integerize_big(grid.b);
    s.av = std::move(va.values);
    s.bv = std::move(vb.values);
    const Scalar t = Scalar(2) * grid.target_area * Scalar(va.scale) * Scalar(vb.scale);
    s.integral = denominator(t) == 1;
    if (s.integral) s.target = numerator(t);
    for (const BigInt& v : s.av) {
        const BigInt a = abs(v);
        if (a > s.max_abs) s.max_abs = a;
    }
    for (const BigInt& v : s.bv) {
        const BigInt a = abs(v);
        if (a > s.max_abs) s.max_abs = a;
    }
    return s;
}

enum class Width { I64, I128, Big };

Width choose_width(const ScaledGrid& s) {
    const BigInt t = s.integral ? abs(s.target) : BigInt(0);
    if (s.max_abs <= (BigInt(1) << 26) && t <= (BigInt(1) << 59)) return Width::I64;
    if (s.max_abs <= (BigInt(1) << 55) && t <= (BigInt(1) << 110)) return Width::I128;
    return Width::Big;
}

template <class I>
I to_int(const BigInt& v);

template <>
std::int64_t to_int<std::int64_t>(const BigInt& v) {
    return v.convert_to<std::int64_t>();
}

template <>
__int128 to_int<__int128>(const BigInt& v) {
    const bool neg = v < 0;
    const BigInt a = abs(v);
    const std::uint64_t lo = BigInt(a & BigInt(~std::uint64_t{0})).convert_to<std::uint64_t>();
    const std::uint64_t hi = BigInt((a >> 64) & BigInt(~std::uint64_t{0})).convert_to<std::uint64_t>();
    const unsigned __int128 u = (static_cast<unsigned __int128>(hi) << 64) | lo;
    const __int128 r = static_cast<__int128>(u);
    return neg ? -r : r;
}

template <class I>
std::vector<I> to_vec(const std::vector<BigInt>& vs) {
    std::vector<I> out;
    out.reserve(vs.size());
    for (const BigInt& v : vs) out.push_back(to_int<I>(v));
    return out;
}

// Deterministic chunked parallelism: fn(begin, end, thread_index) over a
// fixed block partition. Results must be folded by the caller in thread
// order (and all our folds are integer sums, so any order gives the same
// value bit for bit).
void parallel_chunks(std::size_t n, int jobs,
                     const std::function<void(std::size_t, std::size_t, int)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n < 2) {
        fn(0, n, 0);
        return;
    }
    const std::size_t threads = std::min<std::size_t>(jobs, n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(fn, begin, end, static_cast<int>(t));
    }
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Diagonal-shift class maps: key (v_j - v_i, v_k - v_i) over index triples.
// The class size equals the multiplicity of each member.
// ---------------------------------------------------------------------------

template <class I>
using ClassMap = std::map<std::pair<I, I>, std::int64_t>;

template <class I>
ClassMap<I> diag_classes(const std::vector<I>& vals) {
    ClassMap<I> classes;
    for (const I& a : vals)
        for (const I& b : vals)
            for (const I& c : vals) classes[{b - a, c - a}] += 1;
    return classes;
}

// ---------------------------------------------------------------------------
// The plane kernel: for every distinct nondegenerate plane class
// (d1, d2) with multiplicity w, count ordered solutions (x,y,z) in B^3 of
//    alpha x + beta y + gamma z = T,  (alpha,beta,gamma) = (d2-d1, -d2, d1),
// optionally classifying each solution by the B-triple multiplicity.
// ---------------------------------------------------------------------------

struct KernelOut {
    std::int64_t ordered = 0;     // all solutions, weighted by plane multiplicity
    std::int64_t ordered_eq = 0;  // solutions on planes whose A-triple repeats a coordinate
    std::int64_t rr = 0, rp = 0, pr = 0, pp = 0;  // weighted, meaningful when classify_k > 0

    void add(const KernelOut& o) {
        ordered += o.ordered;
        ordered_eq += o.ordered_eq;
        rr += o.rr;
        rp += o.rp;
        pr += o.pr;
        pp += o.pp;
    }
};

template <class I>
struct PlaneRec {
    I d1;
    I d2;
    std::int64_t w;
};

template <class I>
KernelOut run_plane_kernel(const std::vector<I>& av, const std::vector<I>& bv, const I& target,
                           std::int64_t classify_k, int jobs) {
    KernelOut out;
    if (av.size() < 2) return out;  // every triple is diagonal: no planes

    ClassMap<I> aclasses = diag_classes(av);
    std::vector<PlaneRec<I>> planes;
    planes.reserve(aclasses.size());
    for (const auto& [key, w] : aclasses) {
        if (key.first == 0 && key.second == 0) continue;  // degenerate diagonal
        planes.push_back({key.first, key.second, w});
    }

    const bool classify = classify_k > 0;
    ClassMap<I> bclasses;
    if (classify) bclasses = diag_classes(bv);

    const I bmin = bv.front();
    const I bmax = bv.back();
    const auto member = [&](const I& v) {
        return v >= bmin && v <= bmax && std::binary_search(bv.begin(), bv.end(), v);
    };

    std::vector<KernelOut> locals(std::max(1, jobs));
    parallel_chunks(planes.size(), jobs, [&](std::size_t begin, std::size_t end, int tid) {
        KernelOut local;
        for (std::size_t pi = begin; pi < end; ++pi) {
            const PlaneRec<I>& plane = planes[pi];
            const I alpha = plane.d2 - plane.d1;
            const I beta = I(0) - plane.d2;
            const I gamma = plane.d1;
            std::int64_t hits = 0, hits_rich = 0;

            // One solved coordinate per (z, x) (or per z when a coefficient
            // vanishes and a full coordinate is free).
            for (const I& z : bv) {
                const I r = target - gamma * z;
                if (alpha == 0) {  // b = c: x free
                    const I q = r / beta;
                    if (q * beta == r && member(q)) {
                        if (classify) {
                            for (const I& x : bv) {
                                const std::int64_t wb = bclasses.at({q - x, z - x});
                                ++hits;
                                if (wb >= classify_k) ++hits_rich;
                            }
                        } else {
                            hits += static_cast<std::int64_t>(bv.size());
                        }
                    }
                } else if (beta == 0) {  // a = c: y free
                    const I q = r / alpha;
                    if (q * alpha == r && member(q)) {
                        if (classify) {
                            for (const I& y : bv) {
                                const std::int64_t wb = bclasses.at({y - q, z - q});
                                ++hits;
                                if (wb >= classify_k) ++hits_rich;
                            }
                        } else {
                            hits += static_cast<std::int64_t>(bv.size());
                        }
                    }
                } else {
                    for (const I& x : bv) {
                        const I num = r - alpha * x;
                        const I q = num / beta;
                        if (q * beta == num && member(q)) {
                            ++hits;
                            if (classify) {
                                const std::int64_t wb = bclasses.at({q - x, z - x});
                                if (wb >= classify_k) ++hits_rich;
                            }
                        }
                    }
                }
            }

            const std::int64_t weighted = plane.w * hits;
            local.ordered += weighted;
            const bool eq_abscissa =
                plane.d1 == 0 || plane.d2 == 0 || plane.d1 == plane.d2;
            if (eq_abscissa) local.ordered_eq += weighted;
            if (classify) {
                const std::int64_t hits_poor = hits - hits_rich;
                if (plane.w >= classify_k) {
                    local.rr += plane.w * hits_rich;
                    local.rp += plane.w * hits_poor;
                } else {
                    local.pr += plane.w * hits_rich;
                    local.pp += plane.w * hits_poor;
                }
            }
        }
        locals[static_cast<std::size_t>(tid)] = local;
    });
    for (const KernelOut& local : locals) out.add(local);
    return out;
}

template <class I>
std::int64_t run_brute_kernel(const std::vector<I>& av, const std::vector<I>& bv, const I& target) {
    struct Pt {
        I x;
        I y;
    };
    std::vector<Pt> pts;
    pts.reserve(av.size() * bv.size());
    for (const I& x : av)
        for (const I& y : bv) pts.push_back({x, y});

    std::int64_t count = 0;
    const I neg_target = I(0) - target;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const I dx1 = pts[j].x - pts[i].x;
            const I dy1 = pts[j].y - pts[i].y;
            for (std::size_t l = j + 1; l < n; ++l) {
                const I det = dx1 * (pts[l].y - pts[i].y) - (pts[l].x - pts[i].x) * dy1;
                if (det == target || det == neg_target) ++count;
            }
        }
    }
    return count;
}

KernelOut dispatch_plane_kernel(const Grid& grid, std::int64_t classify_k, const CountOptions& opts) {
    if (!opts.override_guard) {
        const std::uint64_t na = grid.a.size(), nb = grid.b.size();
        // conservative cost estimate |A|^3 |B|^2, saturating
        long double est = static_cast<long double>(na) * na * na * nb * nb;
        if (est > static_cast<long double>(opts.incidence_guard))
            throw ResourceError("incidence counter guard exceeded (|A|^3 |B|^2 > guard); "
                                "use the override flag to force the run");
    }
    const ScaledGrid s = scale_grid(grid);
    if (!s.integral) return {};  // non-integer scaled target: no solutions
    switch (choose_width(s)) {
        case Width::I64:
            return run_plane_kernel<std::int64_t>(to_vec<std::int64_t>(s.av),
                                                  to_vec<std::int64_t>(s.bv),
                                                  to_int<std::int64_t>(s.target), classify_k,
                                                  opts.jobs);
        case Width::I128:
            return run_plane_kernel<__int128>(to_vec<__int128>(s.av), to_vec<__int128>(s.bv),
                                              to_int<__int128>(s.target), classify_k, opts.jobs);
        case Width::Big:
            return run_plane_kernel<BigInt>(s.av, s.bv, s.target, classify_k, opts.jobs);
    }
    throw std::logic_error("unreachable");
}

std::int64_t checked_third(std::int64_t ordered, const char* what) {
    if (ordered % 3 != 0)
        throw TheoremViolation(std::string(what) +
                               ": ordered solution count not divisible by 3; counting bug");
    return ordered / 3;
}

}  // namespace

Scalar triangle_area2(const Point2& p1, const Point2& p2, const Point2& p3) {
    return (p2.x - p1.x) * (p3.y - p1.y) - (p3.x - p1.x) * (p2.y - p1.y);
}

std::int64_t count_unit_triangles_bruteforce(const Grid& grid, const CountOptions& opts) {
    if (!opts.override_guard && grid.n() > opts.bruteforce_guard)
        throw ResourceError("brute-force guard exceeded (" + std::to_string(grid.n()) + " points > " +
                            std::to_string(opts.bruteforce_guard) + "); use the override flag");
    const ScaledGrid s = scale_grid(grid);
    if (!s.integral) return 0;
    // The determinant doubles the coordinate magnitudes, so demote the width
    // thresholds by one notch relative to the plane kernel.
    const BigInt t = abs(s.target);
    if (s.max_abs <= (BigInt(1) << 26) && t <= (BigInt(1) << 59))
        return run_brute_kernel<std::int64_t>(to_vec<std::int64_t>(s.av), to_vec<std::int64_t>(s.bv),
                                              to_int<std::int64_t>(s.target));
    if (s.max_abs <= (BigInt(1) << 55) && t <= (BigInt(1) << 110))
        return run_brute_kernel<__int128>(to_vec<__int128>(s.av), to_vec<__int128>(s.bv),
                                          to_int<__int128>(s.target));
    return run_brute_kernel<BigInt>(s.av, s.bv, s.target);
}

OrderedCount count_ordered_solutions(const Grid& grid, const CountOptions& opts) {
    const KernelOut out = dispatch_plane_kernel(grid, 0, opts);
    OrderedCount result;
    result.ordered = out.ordered;
    result.triangles = checked_third(out.ordered, "count_ordered_solutions");
    return result;
}

std::int64_t count_unit_triangles_incidence(const Grid& grid, const CountOptions& opts) {
    return count_ordered_solutions(grid, opts).triangles;
}

std::int64_t count_equal_abscissa_triangles(const Grid& grid, const CountOptions& opts) {
    const KernelOut out = dispatch_plane_kernel(grid, 0, opts);
    return checked_third(out.ordered_eq, "count_equal_abscissa_triangles");
}

PlaneH plane_of(const Triple& p, const Scalar& target_area) {
    if (target_area <= 0) throw DomainError("target area must be positive");
    PlaneH h;
    h.alpha = p.c - p.b;
    h.beta = p.a - p.c;
    h.gamma = p.b - p.a;
    h.rhs = Scalar(2) * target_area;
    h.key = {p.b - p.a, p.c - p.a};
    h.degenerate = (p.a == p.b && p.b == p.c);
    return h;
}

std::int64_t multiplicity(const Triple& p, const GroundSet& x) {
    if (!x.contains(p.a) || !x.contains(p.b) || !x.contains(p.c))
        throw DomainError("multiplicity: triple coordinate outside the ground set");
    std::vector<Scalar> inter;
    for (const Scalar& v : x) inter.push_back(v - p.a);
    for (const Scalar* coord : {&p.b, &p.c}) {
        std::vector<Scalar> shifted;
        shifted.reserve(x.size());
        for (const Scalar& v : x) shifted.push_back(v - *coord);
        std::vector<Scalar> merged;
        std::set_intersection(inter.begin(), inter.end(), shifted.begin(), shifted.end(),
                              std::back_inserter(merged));
        inter = std::move(merged);
    }
    return static_cast<std::int64_t>(inter.size());
}

namespace {

template <class I>
std::int64_t rich_points_impl(const std::vector<I>& vals, std::int64_t k) {
    ClassMap<I> classes = diag_classes(vals);
    std::int64_t count = 0;
    for (const auto& [key, w] : classes)
        if (w >= k) count += w;
    return count;
}

template <class I>
std::int64_t project_rich_impl(const std::vector<I>& vals, std::int64_t k) {
    ClassMap<I> classes = diag_classes(vals);
    std::set<std::pair<I, I>> pairs;
    for (const I& a : vals)
        for (const I& b : vals)
            for (const I& c : vals)
                if (classes.at({b - a, c - a}) >= k) pairs.insert({a, b});
    return static_cast<std::int64_t>(pairs.size());
}

}  // namespace

RichPointsResult rich_points(const GroundSet& x, std::int64_t k, bool enumerate) {
    if (k < 1) throw DomainError("rich_points requires k >= 1");
    RichPointsResult result;
    if (auto iv = integerize(x)) {
        result.count = rich_points_impl<std::int64_t>(iv->values, k);
    } else {
        result.count = rich_points_impl<BigInt>(integerize_big(x).values, k);
    }
    if (enumerate) {
        std::vector<Triple> pts;
        for (const Scalar& a : x)
            for (const Scalar& b : x)
                for (const Scalar& c : x) {
                    Triple t{a, b, c};
                    if (multiplicity(t, x) >= k) pts.push_back(std::move(t));
                }
        result.points = std::move(pts);
    }
    return result;
}

std::int64_t project_rich(const GroundSet& x, std::int64_t k) {
    if (k < 1) throw DomainError("project_rich requires k >= 1");
    if (auto iv = integerize(x)) return project_rich_impl<std::int64_t>(iv->values, k);
    return project_rich_impl<BigInt>(integerize_big(x).values, k);
}

DecompositionCounts classify_triangles(const Grid& grid, std::int64_t k, const CountOptions& opts) {
    if (k < 1) throw DomainError("classify_triangles requires k >= 1");
    const KernelOut out = dispatch_plane_kernel(grid, k, opts);
    DecompositionCounts counts;
    counts.k = k;
    counts.rr = checked_third(out.rr, "classify rr");
    counts.rp = checked_third(out.rp, "classify rp");
    counts.pr = checked_third(out.pr, "classify pr");
    counts.pp = checked_third(out.pp, "classify pp");
    counts.total = checked_third(out.ordered, "classify total");
    if (counts.rr + counts.rp + counts.pr + counts.pp != counts.total)
        throw TheoremViolation("classification classes do not partition the triangle count");
    return counts;
}

std::vector<PlaneH> distinct_planes(const Grid& grid) {
    const Scalar rhs = Scalar(2) * grid.target_area;
    std::map<std::pair<Scalar, Scalar>, std::int64_t> classes;
    if (auto iv = integerize(grid.a)) {
        ClassMap<std::int64_t> ic = diag_classes(iv->values);
        const Scalar scale(iv->scale);
        for (const auto& [key, w] : ic)
            classes[{Scalar(key.first) / scale, Scalar(key.second) / scale}] = w;
    } else {
        for (const Scalar& a : grid.a)
            for (const Scalar& b : grid.a)
                for (const Scalar& c : grid.a) classes[{b - a, c - a}] += 1;
    }
    std::vector<PlaneH> planes;
    planes.reserve(classes.size());
    for (const auto& [key, w] : classes) {
        if (key.first == 0 && key.second == 0) continue;
        PlaneH h;
        h.key = key;
        h.gamma = key.first;
        h.beta = -key.second;
        h.alpha = key.second - key.first;
        h.rhs = rhs;
        h.w = w;
        h.degenerate = false;
        planes.push_back(std::move(h));
    }
    return planes;
}

std::vector<DyadicClass> dyadic_plane_classes(const Grid& grid, std::int64_t k) {
    if (k < 2) throw DomainError("dyadic_plane_classes requires k >= 2");
    const int imax = std::bit_width(static_cast<std::uint64_t>(k - 1));
    std::vector<DyadicClass> classes(static_cast<std::size_t>(imax));
    const BigInt na = grid.a.size();
    const BigInt cube = na * na * na;
    for (int i = 1; i <= imax; ++i) {
        classes[i - 1].i = i;
        classes[i - 1].weight_sum = 0;
        classes[i - 1].trivial_bound = make_scalar(cube, BigInt(1) << (i - 1));
    }
    for (const PlaneH& h : distinct_planes(grid)) {
        if (h.w >= k) continue;  // k-rich planes live outside the dyadic classes
        const int i = std::bit_width(static_cast<std::uint64_t>(h.w));
        classes[i - 1].plane_count += 1;
        classes[i - 1].weight_sum += h.w;
    }
    for (const DyadicClass& c : classes) {
        if (Scalar(c.plane_count) > c.trivial_bound)
            throw TheoremViolation("dyadic class exceeds its trivial bound |A|^3 / 2^{i-1}");
    }
    return classes;
}

std::vector<PlanarLine> slice_lines(const Grid& grid, const Scalar& z0,
                                    const std::vector<PlaneH>& planes) {
    if (!grid.b.contains(z0)) throw DomainError("slice_lines: z not an element of B");
    std::vector<PlanarLine> lines;
    lines.reserve(planes.size());
    std::set<std::pair<Scalar, Scalar>> plane_keys;
    std::set<std::tuple<BigInt, BigInt, BigInt>> keys;
    for (const PlaneH& h : planes) {
        if (h.degenerate) throw InputError("slice_lines: degenerate plane in input");
        if (!plane_keys.insert(h.key).second)
            throw InputError("slice_lines: duplicate plane in input");
        PlanarLine line =
            PlanarLine::from_coefficients(h.alpha, h.beta, h.rhs - h.gamma * z0, h.w);
        if (!keys.insert({line.a(), line.b(), line.c()}).second)
            throw TheoremViolation("distinct planes produced equal slice lines");
        lines.push_back(std::move(line));
    }
    return lines;
}

EtaProjectionResult eta_projection(const std::vector<std::pair<Triple, std::int64_t>>& points,
                                   const std::vector<PlaneH>& planes, const Scalar& target_area) {
    if (target_area <= 0) throw DomainError("target area must be positive");
    EtaProjectionResult result;

    // Chart (u, v) = (x - y, x + y - 2z); constant on diagonal lines and
    // injective across them, so multiplicities aggregate per chart point.
    std::map<std::pair<Scalar, Scalar>, std::int64_t> chart;
    for (const auto& [q, mult] : points) {
        if (mult < 1) throw InputError("eta_projection: nonpositive multiplicity");
        chart[{q.a - q.b, q.a + q.b - Scalar(2) * q.c}] += mult;
    }
    result.points.reserve(chart.size());
    for (const auto& [key, mult] : chart) result.points.push_back({key.first, key.second, mult});

    const Scalar rhs = Scalar(4) * target_area;
    std::set<std::pair<Scalar, Scalar>> plane_keys;
    std::set<std::tuple<BigInt, BigInt, BigInt>> keys;
    result.lines.reserve(planes.size());
    for (const PlaneH& h : planes) {
        if (h.degenerate) throw InputError("eta_projection: degenerate plane in input");
        if (!plane_keys.insert(h.key).second)
            throw InputError("eta_projection: duplicate plane in input");
        PlanarLine line = PlanarLine::from_coefficients(h.alpha - h.beta, -h.gamma, rhs, h.w);
        if (!keys.insert({line.a(), line.b(), line.c()}).second)
            throw TheoremViolation("distinct planes projected to equal eta lines");
        result.lines.push_back(std::move(line));
    }
    return result;
}

}  // namespace trigrid
