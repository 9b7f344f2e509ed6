#include "trigrid/bounds.hpp"

#include <cmath>

namespace trigrid {

void BoundInput::normalize() {
    if (d_a > d_b) std::swap(d_a, d_b);
}

double BoundInput::log_n() const {
    if (log_suppressed || n <= 2) return 1.0;
    return std::log2(static_cast<double>(n));
}

FiveTermBound five_term_bound(const BoundInput& input, std::int64_t k) {
    if (k < 1) throw DomainError("five_term_bound requires k >= 1");
    BoundInput in = input;
    in.normalize();
    const double n = static_cast<double>(in.n);
    const double da = to_double(in.d_a);
    const double db = to_double(in.d_b);
    const double lg = in.log_n();
    const double kd = static_cast<double>(k);
    const double logk = k >= 2 ? std::log2(kd) : 0.0;

    FiveTermBound b;
    b.k = k;
    b.t1 = da * da * db * std::pow(n, 3.5) * lg / std::pow(kd, 5.0);
    b.t2 = (std::pow(da, 4.0 / 3.0) + std::pow(db, 4.0 / 3.0)) * std::pow(n, 2.5) *
           std::pow(lg, 2.0 / 3.0) / std::pow(kd, 5.0 / 3.0);
    b.t3 = (da * da + db * db) * n * n * lg / (kd * kd);
    b.t4 = n * n * std::pow(kd, 2.0 / 3.0);
    b.t5 = std::pow(n, 1.5) * kd * logk;
    return b;
}

OptimalK optimal_k(const BoundInput& input) {
    if (input.n < 2) throw DomainError("optimal_k requires n >= 2");
    BoundInput in = input;
    in.normalize();

    OptimalK result;
    const double da = to_double(in.d_a);
    const double db = to_double(in.d_b);
    const double n = static_cast<double>(in.n);
    const double formula =
        std::pow(n, 9.0 / 34.0) * std::pow(da * da * db * in.log_n(), 3.0 / 17.0);
    result.k_formula = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(formula)));

    const auto total = [&](std::int64_t k) { return five_term_bound(in, k).total(); };

    // The total is unimodal in k (each term is exp-convex in log k), so the
    // first k with total(k) <= total(k+1) is the argmin; find it by binary
    // search on that predicate. Ties resolve to the smaller k by <=.
    std::int64_t lo = 1, hi = static_cast<std::int64_t>(in.n);
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (total(mid) <= total(mid + 1))
            hi = mid;
        else
            lo = mid + 1;
    }
    result.k_search = lo;
    result.total_search = total(result.k_search);
    result.total_formula = total(result.k_formula);
    return result;
}

double theorem_bound(const BoundInput& input) {
    if (input.n < 2) throw DomainError("theorem_bound requires n >= 2");
    BoundInput in = input;
    in.normalize();
    const double n = static_cast<double>(in.n);
    const double da = to_double(in.d_a);
    const double db = to_double(in.d_b);
    return std::pow(n, 37.0 / 17.0) * std::pow(da * da * db * in.log_n(), 2.0 / 17.0);
}

bool hypothesis_check(const BoundInput& input) {
    if (input.n < 2) throw DomainError("hypothesis_check requires n >= 2");
    const double da = to_double(input.d_a);
    const double db = to_double(input.d_b);
    if (!(da <= db)) return false;
    const double n = static_cast<double>(input.n);
    const double rhs =
        std::pow(n, 6.0 / 47.0) * std::pow(da, 42.0 / 47.0) * std::pow(input.log_n(), -13.0 / 47.0);
    return db <= rhs;
}

std::vector<ReferenceExponent> reference_exponents() {
    return {
        {"general", make_scalar(20, 9)},
        {"convex", make_scalar(37, 17)},
        {"prior-convex", make_scalar(31, 14)},
    };
}

}  // namespace trigrid
