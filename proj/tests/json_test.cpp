#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zs/json_io.hpp"

using namespace zs;

TEST_CASE("multiset JSON round-trip and schema") {
    GroupSpec spec(3, 2);
    Multiset s(spec, {spec.index({1, 0}), spec.index({1, 0}), spec.index({0, 2})});
    json j = multiset_to_json(s);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("p") == 3);
    CHECK(j.at("k") == 2);
    CHECK(j.at("elements").size() == 3);
    auto back = multiset_from_json(j);
    CHECK(back.spec == spec);
    CHECK(back.elems == s.elems);
}

TEST_CASE("weighting JSON round-trip with null diagonal") {
    GroupSpec spec(2, 2);
    std::mt19937_64 rng(131);
    WeightedDigraph g(spec, 4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) g.set_w(u, v, static_cast<elem_t>(rng() % spec.order()));
    json j = weighting_to_json(g);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("weights")[0][0].is_null());
    auto back = weighting_from_json(j);
    CHECK(back.n == 4);
    CHECK(back.weights == g.weights);

    j["weights"][1][2] = nullptr;
    CHECK_THROWS(weighting_from_json(j)); // missing edge weight
}

TEST_CASE("cycle certificate JSON round-trip") {
    GroupSpec spec(3, 1);
    CycleCertificate cert{{0, 2, 1}, 0};
    json j = cycle_cert_to_json(spec, cert);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("type") == "cycle");
    auto back = cycle_cert_from_json(j);
    CHECK(back.vertices == cert.vertices);
    CHECK(back.claimed_sum == cert.claimed_sum);
}

TEST_CASE("refutation certificate JSON round-trip") {
    GroupSpec spec(3, 1);
    Multiset big(spec, {1, 1, 2});
    Multiset sub(spec, {1, 2});
    RefutationCertificate cert{big, sub, sumset(sub).size()};
    json j = refutation_to_json(cert);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("type") == "refutation");
    auto back = refutation_from_json(j);
    CHECK(back.input.elems == big.elems);
    CHECK(back.proper_subset.elems == sub.elems);
    CHECK(back.shared_sumset_size == cert.shared_sumset_size);
    CHECK(verify_refutation(back));
}

TEST_CASE("report serializers carry the schema field") {
    CHECK(hbounds_to_json(h_exact(2, 2)).at("schema") == 1);
    auto rep = additive_basis_union_test(2, 2, 2, 5, 1);
    CHECK(basis_union_report_to_json(rep).at("schema") == 1);
    auto verdict = f_exhaustive(2, 1, 2, 1 << 10);
    json fj = fverdict_to_json(verdict, 2, 1, 2);
    CHECK(fj.at("schema") == 1);
    CHECK(fj.at("verdict") == "COUNTEREXAMPLE");
}
