#include "trigrid/incidence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace trigrid {

namespace {

// Clears denominators and divides by the content, sign-normalized.
std::array<BigInt, 3> canonical_triple(const Scalar& a, const Scalar& b, const Scalar& c) {
    BigInt l = boost::multiprecision::lcm(denominator(a), denominator(b));
    l = boost::multiprecision::lcm(l, denominator(c));
    BigInt ia = numerator(a) * (l / denominator(a));
    BigInt ib = numerator(b) * (l / denominator(b));
    BigInt ic = numerator(c) * (l / denominator(c));
    const BigInt aa = abs(ia), ab = abs(ib), ac = abs(ic);
    BigInt g = boost::multiprecision::gcd(BigInt(boost::multiprecision::gcd(aa, ab)), ac);
    if (g > 1) {
        ia /= g;
        ib /= g;
        ic /= g;
    }
    if (ia < 0 || (ia == 0 && ib < 0)) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return {std::move(ia), std::move(ib), std::move(ic)};
}

}  // namespace

PlanarLine PlanarLine::from_coefficients(const Scalar& a, const Scalar& b, const Scalar& c,
                                         std::int64_t weight) {
    if (a == 0 && b == 0) throw DomainError("line with zero normal (a,b)");
    PlanarLine line;
    auto t = canonical_triple(a, b, c);
    line.a_ = std::move(t[0]);
    line.b_ = std::move(t[1]);
    line.c_ = std::move(t[2]);
    line.weight_ = weight;
    return line;
}

PlanarLine PlanarLine::through(const PlanarPoint& p, const PlanarPoint& q, std::int64_t weight) {
    if (p.x == q.x && p.y == q.y) throw DomainError("line through two equal points");
    const Scalar a = q.y - p.y;
    const Scalar b = p.x - q.x;
    const Scalar c = a * p.x + b * p.y;
    return from_coefficients(a, b, c, weight);
}

bool PlanarLine::contains(const PlanarPoint& p) const {
    return Scalar(a_) * p.x + Scalar(b_) * p.y == Scalar(c_);
}

BigInt count_incidences(std::span<const PlanarPoint> points, std::span<const PlanarLine> lines,
                        bool weighted) {
    {
        std::set<std::pair<Scalar, Scalar>> pkeys;
        for (const auto& p : points)
            if (!pkeys.insert({p.x, p.y}).second) throw InputError("duplicate point in incidence input");
        std::set<std::tuple<BigInt, BigInt, BigInt>> lkeys;
        for (const auto& l : lines)
            if (!lkeys.insert({l.a(), l.b(), l.c()}).second)
                throw InputError("duplicate line in incidence input");
    }

    // Column index: x -> (y -> weight).
    std::map<Scalar, std::map<Scalar, std::int64_t>> columns;
    for (const auto& p : points) columns[p.x][p.y] = p.weight;

    BigInt total = 0;
    for (const auto& line : lines) {
        BigInt hits = 0;
        if (line.b() == 0) {
            // a*x = c: one column, every point in it is incident.
            const Scalar x0 = make_scalar(line.c(), line.a());
            auto col = columns.find(x0);
            if (col != columns.end()) {
                for (const auto& [y, w] : col->second) hits += weighted ? w : 1;
            }
        } else {
            const Scalar bs(line.b());
            for (const auto& [x, col] : columns) {
                const Scalar y = (Scalar(line.c()) - Scalar(line.a()) * x) / bs;
                auto it = col.find(y);
                if (it != col.end()) hits += weighted ? it->second : 1;
            }
        }
        total += weighted ? hits * line.weight() : hits;
    }
    return total;
}

std::vector<RichLine> rich_lines(std::span<const PlanarPoint> points, std::int64_t k) {
    if (k < 2) throw DomainError("rich_lines requires k >= 2");
    std::map<std::tuple<BigInt, BigInt, BigInt>, std::int64_t> pair_counts;
    std::map<std::tuple<BigInt, BigInt, BigInt>, PlanarLine> first_seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            PlanarLine line = PlanarLine::through(points[i], points[j]);
            auto key = std::make_tuple(line.a(), line.b(), line.c());
            pair_counts[key] += 1;
            first_seen.emplace(key, std::move(line));
        }
    }
    std::vector<RichLine> result;
    for (const auto& [key, pairs] : pair_counts) {
        // pairs = C(count, 2); recover count.
        const std::int64_t count =
            static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(pairs))) / 2.0);
        if (count * (count - 1) / 2 != pairs)
            throw TheoremViolation("pair count is not a binomial number; line grouping bug");
        if (count >= k) result.push_back({first_seen.at(key), count});
    }
    return result;
}

std::int64_t fixed_direction_rich_count(const GroundSet& x, std::int64_t k) {
    if (k < 1) throw DomainError("fixed_direction_rich_count requires k >= 1");
    const DiffProfile profile = rep_function(x, x);
    std::int64_t total = 0;
    for (const auto& [s, delta] : profile.entries)
        if (delta >= k) total += delta;
    return total;
}

double st_bound(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw DomainError("st_bound requires M, N >= 1");
    const __int128 mn = static_cast<__int128>(m) * n;
    // Integer cube-root check so perfect-cube inputs evaluate exactly.
    std::int64_t r = std::llround(std::cbrt(static_cast<double>(m) * static_cast<double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r * r > mn) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) * (r + 1) <= mn) ++r;
    double power;
    if (r > 0 && static_cast<__int128>(r) * r * r == mn) {
        power = static_cast<double>(r) * static_cast<double>(r);
    } else {
        power = std::pow(static_cast<double>(m) * static_cast<double>(n), 2.0 / 3.0);
    }
    return power + static_cast<double>(m) + static_cast<double>(n);
}

}  // namespace trigrid
