// ground_set.hpp: finite sets of exact rationals and their additive statistics.
//
// A GroundSet is a strictly increasing, duplicate-free sequence of Scalars.
// On top of it live the convexity predicate, the representation function
// delta_{X,Y}(s) = #{(x,y) : x - y = s}, and the calibration estimators for
// the Szemeredi--Trotter-type parameter d(X) and the sumset/product-set
// quantities q(A), q~(A), |AA|/|A|.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "trigrid/scalar.hpp"

namespace trigrid {

class GroundSet {
public:
    // Validates: nonempty, strictly increasing. Throws InputError otherwise.
    explicit GroundSet(std::vector<Scalar> elements);

    // Sorts and deduplicates first; still requires a nonempty result.
    static GroundSet from_values(std::vector<Scalar> values);

    std::size_t size() const { return elems_.size(); }
    const Scalar& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Scalar>& elements() const { return elems_; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(const Scalar& v) const;

    bool operator==(const GroundSet& other) const { return elems_ == other.elems_; }

private:
    std::vector<Scalar> elems_;
};

// Representation-function histogram of X - Y. Key order is the Scalar order,
// so iteration (and therefore serialization) is deterministic.
struct DiffProfile {
    std::map<Scalar, std::int64_t> entries;
    std::size_t nx = 0;
    std::size_t ny = 0;

    std::int64_t at(const Scalar& s) const {
        auto it = entries.find(s);
        return it == entries.end() ? 0 : it->second;
    }
};

// Calibrated SzT-type parameter with the witnesses attaining the maximum
// ratio count * tau^3 / (|X| |Y|^2). alpha is fixed at 2 throughout.
struct DParamWitness {
    std::size_t family_index = 0;
    std::int64_t tau = 1;
    std::int64_t count = 0;
};

struct DParam {
    Scalar value;
    int alpha = 2;
    std::vector<DParamWitness> witnesses;
};

// True iff consecutive gaps strictly increase. Sets of size <= 2 are convex
// (the defining condition is vacuous).
bool is_convex(const GroundSet& x);

// All differences x - y with exact multiplicities. Postconditions (tested):
// sum of values = |X||Y|, every value <= min(|X|,|Y|), key count = |X-Y|.
DiffProfile rep_function(const GroundSet& x, const GroundSet& y);

// |{s : delta(s) >= tau}|, exact. tau >= 1 required.
std::int64_t rich_diff_count(const DiffProfile& profile, std::int64_t tau);

// Lower estimate of d(X) over a finite family of test sets Y and a list of
// thresholds tau: the max of count * tau^3 / (|X| |Y|^2). When every count
// is zero the value is clamped to the positive floor 1/|X|. The result never
// exceeds |X| (that bound is an exact theorem, not an observation).
DParam calibrate_d(const GroundSet& x, const std::vector<GroundSet>& family,
                   const std::vector<std::int64_t>& taus);

// min over C in family of |A+C|^2 / (|A| |C|), exact.
Scalar q_estimate(const GroundSet& a, const std::vector<GroundSet>& family);

// min over (shift, C) of |(A+shift) * C|^2 / (|A| |C|), exact. Requires A
// strictly positive and all shifts nonzero.
Scalar qtilde_estimate(const GroundSet& a, const std::vector<Scalar>& shifts,
                       const std::vector<GroundSet>& family);

// |A*A| / |A|, exact.
Scalar mult_doubling(const GroundSet& a);

// Set algebra used by the estimators and the energy module.
GroundSet sumset(const GroundSet& a, const GroundSet& b);
GroundSet product_set(const GroundSet& a, const GroundSet& b);
GroundSet dilate(const GroundSet& a, const Scalar& factor);   // factor != 0
GroundSet translate(const GroundSet& a, const Scalar& shift);

// File format: one element per line, "p/q" or "p"; '#' starts a comment;
// blank lines ignored; strictly increasing order enforced on load.
GroundSet load_ground_set(const std::filesystem::path& path);
void save_ground_set(const GroundSet& set, const std::filesystem::path& path);

// When every element (after clearing denominators by the lcm `scale`) fits
// comfortably in int64, the heavy counters run on machine integers. values
// are strictly increasing; scale >= 1.
struct IntView {
    std::vector<std::int64_t> values;
    BigInt scale;
};
std::optional<IntView> integerize(const GroundSet& set, std::int64_t max_abs = (std::int64_t{1} << 40));

// Same clearing with arbitrary-precision values; always succeeds. Fallback
// path for inputs too large for the int64 kernels.
struct BigIntView {
    std::vector<BigInt> values;
    BigInt scale;
};
BigIntView integerize_big(const GroundSet& set);

}  // namespace trigrid
