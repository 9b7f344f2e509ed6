// report.hpp: ratio-report rows shared by the energy module and the harness.
//
// A row compares an exactly computed left-hand side against a bound
// expression. ASSERTED-EXACT rows are theorems: the comparison is done in
// exact arithmetic and a violation throws TheoremViolation. REPORT-ONLY rows
// carry the empirical constant of an O(.) statement and assert nothing.
#pragma once

#include <optional>
#include <string>

#include "trigrid/scalar.hpp"

namespace trigrid {

// A bound value that is exact when the expression happens to be rational
// (trivial counting bounds) and a double otherwise (log/power expressions).
struct BoundValue {
    std::optional<Scalar> exact;
    double approx = 0.0;

    static BoundValue from_exact(Scalar v) {
        BoundValue b;
        b.approx = to_double(v);
        b.exact = std::move(v);
        return b;
    }
    static BoundValue from_approx(double v) {
        BoundValue b;
        b.approx = v;
        return b;
    }
};

enum class Verdict { AssertedExact, ReportOnly };

inline const char* to_string(Verdict v) {
    return v == Verdict::AssertedExact ? "ASSERTED-EXACT" : "REPORT-ONLY";
}

struct RatioRow {
    std::string label;
    std::string params;
    Scalar lhs;        // exact count (integers embed into Scalar)
    BoundValue bound;
    double ratio = 0.0;  // lhs / bound, 0 when the bound is 0
    Verdict verdict = Verdict::ReportOnly;
};

inline RatioRow make_row(std::string label, std::string params, Scalar lhs, BoundValue bound,
                         Verdict verdict) {
    RatioRow row;
    row.label = std::move(label);
    row.params = std::move(params);
    row.lhs = std::move(lhs);
    row.bound = std::move(bound);
    row.ratio = row.bound.approx == 0.0 ? 0.0 : to_double(row.lhs) / row.bound.approx;
    row.verdict = verdict;
    return row;
}

}  // namespace trigrid
