#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zs/matroid.hpp"

using namespace zs;

namespace {

// A random full-rank multiset for packing tests.
Multiset random_full_rank(const GroupSpec& spec, std::size_t size, std::mt19937_64& rng) {
    while (true) {
        auto s = oracle::random_multiset(spec, size, rng);
        if (rank_of(spec, s.elems) == spec.k()) return s;
    }
}

} // namespace

TEST_CASE("pack_disjoint_bases: pinned examples") {
    GroupSpec z22(2, 2);
    elem_t e1 = z22.unit(0), e2 = z22.unit(1);

    SUBCASE("two copies of a basis split into two bases") {
        Multiset s(z22, {e1, e1, e2, e2});
        auto packing = pack_disjoint_bases(s, 2);
        REQUIRE(packing);
        CHECK(verify_packing(s, 2, *packing));
        for (const auto& b : packing->bases) CHECK(b.elems == std::vector<elem_t>{e1, e2});
        CHECK(packing->leftover.size() == 0);
    }
    SUBCASE("three e1 and one e2 cannot give two bases") {
        Multiset s(z22, {e1, e1, e1, e2});
        CHECK_FALSE(pack_disjoint_bases(s, 2));
        CHECK_FALSE(packing_condition_bruteforce(s, 2));
    }
    SUBCASE("a single basis packs at t = 1") {
        Multiset s(z22, {e1, e2});
        CHECK(packing_condition_bruteforce(s, 1));
        auto packing = pack_disjoint_bases(s, 1);
        REQUIRE(packing);
        CHECK(verify_packing(s, 1, *packing));
    }
    SUBCASE("rank-deficient input is rejected") {
        CHECK_THROWS(pack_disjoint_bases(Multiset(z22, {e1, e1}), 1));
        CHECK_THROWS(pack_disjoint_bases(Multiset(z22, {e1, e2}), 0));
    }
}

TEST_CASE("packing agrees with the Edmonds condition on 200 random instances") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 200; ++trial) {
        int p = trial % 2 == 0 ? 2 : 3;
        int k = 1 + static_cast<int>(rng() % 4);
        GroupSpec spec(p, k);
        std::size_t size = static_cast<std::size_t>(k) + rng() % (13 - k);
        auto s = random_full_rank(spec, size, rng);
        int t = 1 + static_cast<int>(rng() % 3);
        auto packing = pack_disjoint_bases(s, t);
        CHECK(packing.has_value() == packing_condition_bruteforce(s, t));
        if (packing) CHECK(verify_packing(s, t, *packing));
    }
}

TEST_CASE("packing is deterministic") {
    GroupSpec spec(3, 2);
    std::mt19937_64 rng(97);
    auto s = random_full_rank(spec, 8, rng);
    auto a = pack_disjoint_bases(s, 2);
    auto b = pack_disjoint_bases(s, 2);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
        REQUIRE(a->bases.size() == b->bases.size());
        for (std::size_t i = 0; i < a->bases.size(); ++i)
            CHECK(a->bases[i].elems == b->bases[i].elems);
        CHECK(a->leftover.elems == b->leftover.elems);
    }
}

TEST_CASE("packing_condition_bruteforce respects its budget") {
    GroupSpec spec(2, 2);
    // 4 * 3 * 2 = 24 multiplicity combinations exceed a budget of 8.
    Multiset s(spec, {1, 1, 1, 2, 2, 3});
    CHECK_THROWS(packing_condition_bruteforce(s, 1, 8));
}

TEST_CASE("random_basis yields bases and is seed-deterministic") {
    GroupSpec spec(3, 3);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto b = random_basis(spec, seed);
        CHECK(b.size() == 3);
        CHECK(rank_of(spec, b) == 3);
        CHECK(random_basis(spec, seed) == b);
    }
}

TEST_CASE("additive_basis_union_test: threshold regimes reach full sumsets") {
    SUBCASE("p=2, k=4, l=2") {
        auto rep = additive_basis_union_test(2, 4, 2, 100, 12345);
        CHECK(rep.full_fraction == 1.0);
        CHECK(rep.failures.empty());
    }
    SUBCASE("p=3, k=2, l=4") {
        auto rep = additive_basis_union_test(3, 2, 4, 100, 12345);
        CHECK(rep.full_fraction == 1.0);
    }
    SUBCASE("below threshold gives no guarantee: single basis of Z_3") {
        auto rep = additive_basis_union_test(3, 1, 1, 50, 12345);
        CHECK(rep.full_fraction < 1.0); // {x} never sums to all of Z_3
        CHECK(rep.failures.size() == 50 - static_cast<std::size_t>(rep.full_fraction * 50 + 0.5));
    }
}

TEST_CASE("additive_basis_union_test is schedule-independent (seeded per trial)") {
    auto a = additive_basis_union_test(3, 2, 2, 40, 777);
    auto b = additive_basis_union_test(3, 2, 2, 40, 777);
    CHECK(a.full_fraction == b.full_fraction);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i)
        CHECK(a.failures[i].elems == b.failures[i].elems);
}
