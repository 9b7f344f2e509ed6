#include <doctest.h>

#include "trigrid/energy.hpp"
#include "trigrid/generators.hpp"

using namespace trigrid;

namespace {

GroundSet gs(std::initializer_list<long> values) {
    std::vector<Scalar> v;
    for (long x : values) v.push_back(Scalar(x));
    return GroundSet(std::move(v));
}

GroundSet random_set(std::size_t m, std::uint64_t seed) {
    GeneratorSpec uni;
    uni.kind = GeneratorKind::UniformRandom;
    return gen_set(uni, m, seed);
}

}  // namespace

TEST_SUITE_BEGIN("energy");

TEST_CASE("shifted intersection worked examples") {
    const GroundSet a = gs({0, 1, 3});
    CHECK(shifted_intersection(a, {{Scalar(1)}}) == std::vector<Scalar>{Scalar(0)});
    CHECK(shifted_intersection(a, {{Scalar(0)}}) ==
          std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(3)});
    CHECK(shifted_intersection(a, {{Scalar(1), Scalar(3)}}) == std::vector<Scalar>{Scalar(0)});
    CHECK(shifted_intersection(a, {{Scalar(7)}}).empty());
    CHECK_THROWS_AS(shifted_intersection(a, {{}}), DomainError);
}

TEST_CASE("energy worked values for {0,1,3}") {
    const GroundSet a = gs({0, 1, 3});
    CHECK(energy_k(a, 2).value == 15);
    CHECK(energy_k(a, 3).value == 33);
    CHECK(energy_k(a, 4).value == 87);
    CHECK(energy_k_tuple(a, 2).value == 15);
    CHECK(energy_k_tuple(a, 3).value == 33);
    CHECK(energy_k_tuple(a, 4).value == 87);
    CHECK(energy_kl(a, 2, 3).value == 33);  // E_{2,3} = E_3
    CHECK(energy_kl(a, 3, 2).value == 33);  // E_{3,2} = E_3
    CHECK(energy_kl(a, 3, 3).value == 51);
    CHECK(energy_kl(a, 4, 3).value == 105);
    CHECK(energy_kl(a, 3, 4).value == 105);
}

TEST_CASE("energy singleton and domain errors") {
    const GroundSet s = gs({5});
    CHECK(energy_k(s, 2).value == 1);
    CHECK(energy_k(s, 4).value == 1);
    CHECK(energy_k_tuple(s, 4).value == 1);
    CHECK(energy_kl(s, 3, 4).value == 1);
    CHECK_THROWS_AS(energy_k(s, 1), DomainError);
    CHECK_THROWS_AS(energy_kl(s, 2, 1), DomainError);
    CHECK_THROWS_AS(energy_k(s, 7), DomainError);  // above the order cap
    CHECK(energy_k(s, 7, 8).value == 1);           // raised cap
}

TEST_CASE("dual definition equality on random sets, k in {2,3,4}") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const GroundSet a = random_set(3 + seed % 8, seed);
        for (int k : {2, 3, 4}) {
            CHECK(energy_k(a, k).value == energy_k_tuple(a, k).value);
        }
    }
}

TEST_CASE("E_{k,l} symmetry on random sets") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const GroundSet a = random_set(3 + seed % 6, seed * 17);
        for (int k : {2, 3, 4})
            for (int l : {2, 3, 4})
                CHECK(energy_kl(a, k, l).value == energy_kl(a, l, k).value);
    }
}

TEST_CASE("E_2 lower bound and the Sidon minimum") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const GroundSet a = random_set(2 + seed % 9, seed * 31);
        const BigInt n(a.size());
        const BigInt e2 = energy_k(a, 2).value;
        CHECK(e2 >= n * n);
        // Sidon <=> every nonzero difference is distinct <=> E_2 attains
        // 2|A|^2 - |A|.
        const DiffProfile p = rep_function(a, a);
        bool sidon = true;
        for (const auto& [s, d] : p.entries)
            if (s != 0 && d > 1) sidon = false;
        CHECK((e2 == 2 * n * n - n) == sidon);
    }
    CHECK(energy_k(gs({1, 2, 4, 8, 16}), 2).value == 2 * 25 - 5);  // geometric sets are Sidon
}

TEST_CASE("rich tuple worked examples") {
    CHECK(rich_tuple_count(gs({0, 1}), 3, 2) == 2);  // (0,0,0) and (1,1,1)
    CHECK(rich_tuple_count(gs({0, 1}), 3, 3) == 0);  // intersection size <= |A| = 2
    // every diagonal tuple attains |A - a| = |A| = 3
    CHECK(rich_tuple_count(gs({0, 1, 3}), 3, 3) == 3);
    CHECK(rich_tuple_count(gs({0, 1, 3}), 3, 2) == 3);
    CHECK(rich_tuple_count(gs({0, 1, 3}), 3, 1) == 27);  // t = 0 always works
    CHECK(rich_tuple_count(gs({0, 1, 2, 4}), 4, 2) == 60);
    CHECK(rich_tuple_count(gs({0, 1, 2, 4}), 4, 1) == 256);
    CHECK_THROWS_AS(rich_tuple_count(gs({0, 1}), 1, 1), DomainError);
    CHECK_THROWS_AS(rich_tuple_count(gs({0, 1}), 3, 0), DomainError);
}

TEST_CASE("rich tuple monotonicity and diagonal floor") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const GroundSet a = random_set(2 + seed % 5, seed * 7);
        for (int m : {2, 3, 4}) {
            std::int64_t prev = -1;
            for (std::int64_t tau = 1; tau <= static_cast<std::int64_t>(a.size()); ++tau) {
                const std::int64_t c = rich_tuple_count(a, m, tau);
                if (prev >= 0) CHECK(c <= prev);
                prev = c;
            }
            CHECK(rich_tuple_count(a, m, 1) >= static_cast<std::int64_t>(a.size()));
        }
    }
}

TEST_CASE("rich tuple bound worked examples") {
    const RatioRow row = verify_rich_tuple_bound(gs({0, 1}), 3, 2);
    CHECK(row.lhs == Scalar(2));
    REQUIRE(row.bound.exact.has_value());
    CHECK(*row.bound.exact == Scalar(5));  // 4 * E_3({0,1}) / 8 = 4*10/8
    CHECK(row.verdict == Verdict::AssertedExact);

    const RatioRow zero = verify_rich_tuple_bound(gs({0, 1}), 3, 3);
    CHECK(zero.lhs == Scalar(0));

    const RatioRow r3 = verify_rich_tuple_bound(gs({0, 1, 3}), 3, 3);
    CHECK(r3.lhs == Scalar(3));
    CHECK(*r3.bound.exact == Scalar(11));  // 9 * 33 / 27
}

TEST_CASE("rich tuple bound never fails across randomized sweeps") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const GroundSet a = random_set(2 + seed % 7, seed * 13);
        for (int m : {3, 4})
            for (std::int64_t tau = 1; tau <= static_cast<std::int64_t>(a.size()); ++tau)
                CHECK_NOTHROW(verify_rich_tuple_bound(a, m, tau));
    }
}

TEST_SUITE_END();
