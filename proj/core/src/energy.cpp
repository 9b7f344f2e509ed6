#include "trigrid/energy.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace trigrid {

namespace {

BigInt int_pow(BigInt base, int exp) {
    BigInt acc = 1;
    while (exp-- > 0) acc *= base;
    return acc;
}

std::vector<Scalar> intersect_sorted(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Scalar> shift_sorted(const GroundSet& a, const Scalar& x) {
    std::vector<Scalar> out;
    out.reserve(a.size());
    for (const Scalar& v : a) out.push_back(v - x);
    return out;
}

void check_order(int k, int max_order, const char* what) {
    if (k < 2) throw DomainError(std::string(what) + " requires order >= 2");
    if (k > max_order)
        throw DomainError(std::string(what) + " order exceeds the configured cap of " +
                          std::to_string(max_order));
}

// Enumerates all (depth)-tuples of shifts with nonempty refinement of `cur`,
// invoking leaf(|A_xvec|) at full depth. Candidate shifts at each level are
// exactly {a - c : a in A, c in cur}; any other shift empties the
// intersection.
void refine(const GroundSet& a, std::vector<Scalar> cur, int remaining,
            const std::function<void(std::size_t)>& leaf) {
    if (remaining == 0) {
        leaf(cur.size());
        return;
    }
    std::set<Scalar> candidates;
    for (const Scalar& av : a)
        for (const Scalar& cv : cur) candidates.insert(av - cv);
    for (const Scalar& s : candidates) {
        std::vector<Scalar> next = intersect_sorted(cur, shift_sorted(a, s));
        if (!next.empty()) refine(a, std::move(next), remaining - 1, leaf);
    }
}

}  // namespace

std::vector<Scalar> shifted_intersection(const GroundSet& a, const ShiftVector& xs) {
    if (xs.components.empty()) throw DomainError("shifted_intersection: empty shift vector");
    std::vector<Scalar> cur(a.begin(), a.end());
    for (const Scalar& x : xs.components) {
        cur = intersect_sorted(cur, shift_sorted(a, x));
        if (cur.empty()) break;
    }
    return cur;
}

EnergyValue energy_k(const GroundSet& a, int k, int max_order) {
    check_order(k, max_order, "energy_k");
    const DiffProfile profile = rep_function(a, a);
    BigInt total = 0;
    for (const auto& [s, delta] : profile.entries) total += int_pow(BigInt(delta), k);
    return {total, k, 2};
}

EnergyValue energy_k_tuple(const GroundSet& a, int k, int max_order) {
    check_order(k, max_order, "energy_k_tuple");
    BigInt total = 0;
    refine(a, std::vector<Scalar>(a.begin(), a.end()), k - 1,
           [&](std::size_t size) { total += int_pow(BigInt(size), 2); });
    return {total, k, 2};
}

EnergyValue energy_kl(const GroundSet& a, int k, int l, int max_order) {
    check_order(k, max_order, "energy_kl");
    check_order(l, max_order, "energy_kl");
    BigInt total = 0;
    refine(a, std::vector<Scalar>(a.begin(), a.end()), k - 1,
           [&](std::size_t size) { total += int_pow(BigInt(size), l); });
    return {total, k, l};
}

std::int64_t rich_tuple_count(const GroundSet& a, int m, std::int64_t tau, int max_order) {
    if (m < 2) throw DomainError("rich_tuple_count requires m >= 2");
    if (m > max_order)
        throw DomainError("rich_tuple_count order exceeds the configured cap of " +
                          std::to_string(max_order));
    if (tau < 1) throw DomainError("rich_tuple_count requires tau >= 1");

    // Depth-first over (a_1,...,a_m) with intersection refinement and
    // pruning: |intersection| only shrinks as coordinates are appended.
    std::int64_t count = 0;
    std::function<void(std::size_t, const std::vector<Scalar>&)> rec =
        [&](std::size_t depth, const std::vector<Scalar>& cur) {
            if (static_cast<std::int64_t>(cur.size()) < tau) return;
            if (depth == static_cast<std::size_t>(m)) {
                ++count;
                return;
            }
            for (const Scalar& av : a) {
                rec(depth + 1, intersect_sorted(cur, shift_sorted(a, av)));
            }
        };
    for (const Scalar& first : a) rec(1, shift_sorted(a, first));
    return count;
}

RatioRow verify_rich_tuple_bound(const GroundSet& a, int m, std::int64_t tau, int max_order) {
    if (m < 3) throw DomainError("verify_rich_tuple_bound requires m >= 3");
    const std::int64_t lhs = rich_tuple_count(a, m, tau, max_order);
    const EnergyValue e = energy_kl(a, m - 1, 3, max_order);
    const BigInt n(a.size());
    const BigInt t(tau);
    const Scalar rhs = make_scalar(n * n * e.value, t * t * t);
    if (Scalar(lhs) > rhs)
        throw TheoremViolation("rich-tuple inequality violated: this is a bug");
    std::string params = "m=" + std::to_string(m) + " tau=" + std::to_string(tau) +
                         " |A|=" + std::to_string(a.size());
    return make_row("rich-tuple", std::move(params), Scalar(lhs), BoundValue::from_exact(rhs),
                    Verdict::AssertedExact);
}

}  // namespace trigrid
