#include "zs/json_io.hpp"

namespace zs {

json spec_to_json(const GroupSpec& spec) { return json{{"p", spec.p()}, {"k", spec.k()}}; }

GroupSpec spec_from_json(const json& j) {
    return GroupSpec(j.at("p").get<int>(), j.at("k").get<int>());
}

json element_to_json(const GroupSpec& spec, elem_t e) { return json(spec.coords(e)); }

elem_t element_from_json(const GroupSpec& spec, const json& j) {
    return spec.index(j.get<std::vector<int>>());
}

json multiset_to_json(const Multiset& s) {
    json elems = json::array();
    for (elem_t e : s.elems) elems.push_back(element_to_json(s.spec, e));
    return json{{"schema", kSchemaVersion}, {"p", s.spec.p()}, {"k", s.spec.k()}, {"elements", elems}};
}

Multiset multiset_from_json(const json& j) {
    GroupSpec spec = spec_from_json(j);
    std::vector<elem_t> elems;
    for (const auto& e : j.at("elements")) elems.push_back(element_from_json(spec, e));
    return Multiset(std::move(spec), std::move(elems));
}

json weighting_to_json(const WeightedDigraph& g) {
    json rows = json::array();
    for (int u = 0; u < g.n; ++u) {
        json row = json::array();
        for (int v = 0; v < g.n; ++v)
            row.push_back(u == v ? json(nullptr) : element_to_json(g.spec, g.w(u, v)));
        rows.push_back(std::move(row));
    }
    return json{{"schema", kSchemaVersion},
                {"p", g.spec.p()},
                {"k", g.spec.k()},
                {"n", g.n},
                {"weights", rows}};
}

WeightedDigraph weighting_from_json(const json& j) {
    GroupSpec spec = spec_from_json(j);
    int n = j.at("n").get<int>();
    WeightedDigraph g(spec, n);
    const auto& rows = j.at("weights");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("weighting: wrong row count");
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(rows[u].size()) != n)
            throw std::invalid_argument("weighting: wrong column count");
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rows[u][v].is_null()) throw std::invalid_argument("weighting: missing edge weight");
            g.set_w(u, v, element_from_json(spec, rows[u][v]));
        }
    }
    return g;
}

json cycle_cert_to_json(const GroupSpec& spec, const CycleCertificate& cert) {
    return json{{"schema", kSchemaVersion},
                {"type", "cycle"},
                {"p", spec.p()},
                {"k", spec.k()},
                {"vertices", cert.vertices},
                {"claimed_sum", element_to_json(spec, cert.claimed_sum)}};
}

CycleCertificate cycle_cert_from_json(const json& j) {
    GroupSpec spec = spec_from_json(j);
    CycleCertificate cert;
    cert.vertices = j.at("vertices").get<std::vector<int>>();
    cert.claimed_sum = element_from_json(spec, j.at("claimed_sum"));
    return cert;
}

json refutation_to_json(const RefutationCertificate& cert) {
    json j = json{{"schema", kSchemaVersion},
                  {"type", "refutation"},
                  {"input", multiset_to_json(cert.input)},
                  {"proper_subset", multiset_to_json(cert.proper_subset)},
                  {"shared_sumset_size", cert.shared_sumset_size}};
    return j;
}

RefutationCertificate refutation_from_json(const json& j) {
    return RefutationCertificate{multiset_from_json(j.at("input")),
                                 multiset_from_json(j.at("proper_subset")),
                                 j.at("shared_sumset_size").get<std::uint64_t>()};
}

json hbounds_to_json(const HBoundsReport& rep) {
    json j{{"schema", kSchemaVersion}, {"p", rep.p},         {"k", rep.k},
           {"lower", rep.lower},       {"upper", rep.upper}, {"nodes", rep.nodes},
           {"budget_exhausted", rep.budget_exhausted}};
    if (rep.exact) j["exact"] = *rep.exact;
    if (rep.witness) j["witness"] = multiset_to_json(*rep.witness);
    return j;
}

json packing_to_json(const BasePacking& packing) {
    json bases = json::array();
    for (const auto& b : packing.bases) bases.push_back(multiset_to_json(b));
    return json{{"schema", kSchemaVersion},
                {"bases", bases},
                {"leftover", multiset_to_json(packing.leftover)}};
}

json basis_union_report_to_json(const BasisUnionReport& rep) {
    json failures = json::array();
    for (const auto& f : rep.failures) failures.push_back(multiset_to_json(f));
    return json{{"schema", kSchemaVersion}, {"p", rep.p},
                {"k", rep.k},               {"l", rep.ell},
                {"trials", rep.trials},     {"full_fraction", rep.full_fraction},
                {"failures", failures}};
}

json fverdict_to_json(const FVerdict& verdict, int p, int k, int n) {
    json j{{"schema", kSchemaVersion}, {"p", p}, {"k", k}, {"n", n},
           {"total_weightings", verdict.total}, {"checked", verdict.checked}};
    switch (verdict.kind) {
        case FVerdictKind::AllHaveCycle: j["verdict"] = "ALL_HAVE_CYCLE"; break;
        case FVerdictKind::Counterexample: j["verdict"] = "COUNTEREXAMPLE"; break;
        case FVerdictKind::BudgetExceeded: j["verdict"] = "BUDGET_EXCEEDED"; break;
    }
    if (verdict.counterexample) {
        j["counterexample"] = weighting_to_json(*verdict.counterexample);
        j["counter"] = verdict.counter;
    }
    return j;
}

json levels_to_json(const WeightedDigraph& g, const GadgetFamilyLevels& fam) {
    json levels = json::array();
    for (const auto& lev : fam.levels) {
        json basis = json::array();
        for (const auto& row : lev.stab.basis()) basis.push_back(row);
        levels.push_back(json{{"values", multiset_to_json(lev.values)},
                              {"sumset_size", lev.sum.size()},
                              {"stabilizer_basis", basis},
                              {"dim", lev.dim},
                              {"vertices", lev.vertices},
                              {"gadgets", lev.gadgets.size()}});
    }
    return json{{"schema", kSchemaVersion},
                {"p", g.spec.p()},
                {"k", g.spec.k()},
                {"v0", fam.v0},
                {"levels", levels}};
}

json recursion_report_to_json(const RecursionStepReport& rep) {
    json violations = json::array();
    for (auto [x, y] : rep.violating_edges) violations.push_back(json::array({x, y}));
    return json{{"schema", kSchemaVersion},
                {"m", rep.m},
                {"k", rep.k},
                {"dims", rep.dims},
                {"x_sizes", rep.x_sizes},
                {"y_sizes", rep.y_sizes},
                {"z_vertices", rep.z_vertices},
                {"z_size", rep.z_vertices.size()},
                {"z_bound", rep.z_bound},
                {"z_size_ok", rep.z_size_ok},
                {"inclusions_ok", rep.inclusions_ok},
                {"claim_edges_ok", rep.edges_ok},
                {"violating_edges", violations}};
}

} // namespace zs
