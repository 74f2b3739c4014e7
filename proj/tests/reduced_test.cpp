#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "zs/reduced.hpp"

using namespace zs;

namespace {

elem_t line_of(const GroupSpec& spec, elem_t e) {
    elem_t best = e;
    for (int c = 2; c < spec.p(); ++c) best = std::min(best, spec.scale(e, c));
    return best;
}

// A random multiset meeting the dim-2 refutation preconditions: |S| =
// 5(p-1)/2, no zero, at most p-1 elements per line through the origin.
Multiset random_refutation_input(const GroupSpec& spec, std::mt19937_64& rng) {
    std::size_t want = static_cast<std::size_t>(5 * (spec.p() - 1) / 2);
    std::uniform_int_distribution<elem_t> dist(1, static_cast<elem_t>(spec.order() - 1));
    std::map<elem_t, int> per_line;
    std::vector<elem_t> elems;
    while (elems.size() < want) {
        elem_t e = dist(rng);
        int& c = per_line[line_of(spec, e)];
        if (c >= spec.p() - 1) continue;
        ++c;
        elems.push_back(e);
    }
    return Multiset(spec, std::move(elems));
}

} // namespace

TEST_CASE("h_lower_witness: pinned examples") {
    auto w23 = h_lower_witness(2, 3);
    CHECK(w23.size() == 3);
    CHECK(is_reduced(w23));

    auto w31 = h_lower_witness(3, 1);
    CHECK(w31.elems == std::vector<elem_t>{1, 1});

    auto w32 = h_lower_witness(3, 2);
    CHECK(w32.size() == 4);
    CHECK(is_reduced(w32));
}

TEST_CASE("h_exact: h_2(k) = k for k <= 5") {
    for (int k = 1; k <= 5; ++k) {
        auto rep = h_exact(2, k);
        REQUIRE(rep.exact);
        CHECK(*rep.exact == k);
        REQUIRE(rep.witness);
        CHECK(is_reduced(*rep.witness));
        CHECK(rep.witness->size() == static_cast<std::size_t>(k));
    }
}

TEST_CASE("h_exact: h_p(1) = p - 1 for small primes") {
    for (int p : {2, 3, 5, 7}) {
        auto rep = h_exact(p, 1);
        REQUIRE(rep.exact);
        CHECK(*rep.exact == p - 1);
    }
}

TEST_CASE("h_exact: h_3(2) confirmed by the exhaustive oracle") {
    auto rep = h_exact(3, 2);
    REQUIRE(rep.exact);
    int h = *rep.exact;
    CHECK(h >= 4); // k(p-1) lower bound
    CHECK(h <= 8); // general upper bound
    REQUIRE(rep.witness);
    CHECK(is_reduced(*rep.witness));
    CHECK(rep.witness->size() == static_cast<std::size_t>(h));

    GroupSpec spec(3, 2);
    CHECK(oracle::reduced_multiset_exists_of_size(spec, h));
    CHECK_FALSE(oracle::reduced_multiset_exists_of_size(spec, h + 1));
}

TEST_CASE("h bounds sandwich the exact value; subadditivity holds") {
    std::map<std::pair<int, int>, int> computed;
    for (auto [p, k] : std::vector<std::pair<int, int>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        auto rep = h_exact(p, k);
        REQUIRE(rep.exact);
        CHECK(rep.lower <= *rep.exact);
        CHECK(static_cast<double>(*rep.exact) <= rep.upper + 1e-9);
        computed[{p, k}] = *rep.exact;
    }
    for (const auto& [pk1, h1] : computed)
        for (const auto& [pk2, h2] : computed) {
            if (pk1.first != pk2.first) continue;
            auto joint = computed.find({pk1.first, pk1.second + pk2.second});
            if (joint != computed.end()) CHECK(h1 + h2 <= joint->second);
        }
}

TEST_CASE("h_exact budget exhaustion is reported, not silently wrong") {
    auto rep = h_exact(3, 2, 10);
    CHECK(rep.budget_exhausted);
    CHECK_FALSE(rep.exact);
}

TEST_CASE("equipartition_coefficient: pinned examples") {
    GroupSpec z3(3, 1);
    CHECK(equipartition_coefficient(z3, {1, 2}, {2}) == 2);

    GroupSpec z22(2, 2);
    CHECK(equipartition_coefficient(z22, {z22.unit(0), z22.unit(1)}, {1, 1}) == 1);

    CHECK_THROWS(equipartition_coefficient(z3, {1, 2}, {3}));
    CHECK_THROWS(equipartition_coefficient(z22, {1}, {1, 1}));
}

TEST_CASE("equipartition_coefficient matches partition enumeration on 100 random instances") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        int p = trial % 2 == 0 ? 3 : 5;
        int k = 1 + static_cast<int>(rng() % 3);
        GroupSpec spec(p, k);
        int m = 1 + static_cast<int>(rng() % 8);
        std::vector<elem_t> vectors;
        for (int i = 0; i < m; ++i) vectors.push_back(static_cast<elem_t>(rng() % spec.order()));
        std::vector<int> degrees(k, 0);
        for (int i = 0; i < m; ++i) degrees[rng() % k]++;
        CHECK(equipartition_coefficient(spec, vectors, degrees) ==
              oracle::coefficient_by_partitions(spec, vectors, degrees));
    }
}

TEST_CASE("equipartition_coefficient is multilinear in each vector") {
    std::mt19937_64 rng(73);
    GroupSpec spec(5, 2);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 2 + static_cast<int>(rng() % 5);
        std::vector<elem_t> vectors;
        for (int i = 0; i < m; ++i) vectors.push_back(static_cast<elem_t>(rng() % spec.order()));
        std::vector<int> degrees(2, 0);
        for (int i = 0; i < m; ++i) degrees[rng() % 2]++;
        int base = equipartition_coefficient(spec, vectors, degrees);
        std::size_t j = rng() % vectors.size();
        int lambda = 1 + static_cast<int>(rng() % 4);
        auto scaled = vectors;
        scaled[j] = spec.scale(scaled[j], lambda);
        CHECK(equipartition_coefficient(spec, scaled, degrees) == base * lambda % 5);
    }
}

TEST_CASE("full_sumset_by_coefficient: pinned examples and one-directional soundness") {
    GroupSpec z3(3, 1);
    Multiset s(z3, {1, 2});
    CHECK(full_sumset_by_coefficient(s));
    CHECK(sumset(s).full());

    CHECK_FALSE(full_sumset_by_coefficient(Multiset(z3, {0, 1})));
    CHECK_THROWS(full_sumset_by_coefficient(Multiset(z3, {1})));

    GroupSpec z32(3, 2);
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        auto cand = oracle::random_multiset(z32, 4, rng);
        if (full_sumset_by_coefficient(cand)) CHECK(sumset(cand).full());
    }
}

TEST_CASE("refute_reduced_dim2: precondition enforcement") {
    GroupSpec z72(7, 2);
    CHECK_THROWS(refute_reduced_dim2(Multiset(z72, std::vector<elem_t>(14, 1)))); // wrong size
    std::vector<elem_t> with_zero(15, 8);
    with_zero[0] = 0;
    CHECK_THROWS(refute_reduced_dim2(Multiset(z72, with_zero))); // contains 0
    CHECK_THROWS(refute_reduced_dim2(Multiset(z72, std::vector<elem_t>(15, 1)))); // line cap
    GroupSpec z52(5, 2);
    CHECK_THROWS(refute_reduced_dim2(Multiset(z52, std::vector<elem_t>(10, 1)))); // p < 7
}

TEST_CASE("refute_reduced_dim2: certificates verify on random p=7 inputs") {
    GroupSpec spec(7, 2);
    std::mt19937_64 rng(83);
    int successes = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto s = random_refutation_input(spec, rng);
        auto out = refute_reduced_dim2(s);
        if (!out.certificate) continue;
        ++successes;
        CHECK(out.failure.empty());
        CHECK(out.claim_m <= 3); // (p-1)/2
        CHECK(out.certificate->proper_subset.size() == 12); // 2(p-1)
        CHECK(verify_refutation(*out.certificate));
        CHECK(sumset(out.certificate->proper_subset).full());
    }
    CHECK(successes > 0);
}

TEST_CASE("verify_refutation rejects corrupted certificates") {
    GroupSpec z3(3, 1);
    Multiset big(z3, {1, 1, 2});
    Multiset sub(z3, {1, 2});
    RefutationCertificate good{big, sub, sumset(sub).size()};
    CHECK(verify_refutation(good));
    RefutationCertificate wrong_size{big, sub, 1};
    CHECK_FALSE(verify_refutation(wrong_size));
    RefutationCertificate not_subset{big, Multiset(z3, {2, 2}), 3};
    CHECK_FALSE(verify_refutation(not_subset));
    RefutationCertificate not_proper{big, big, 3};
    CHECK_FALSE(verify_refutation(not_proper));
}
