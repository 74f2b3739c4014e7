// zscycle: command-line driver for the zero-sum cycle toolkit.
//
// Exit codes: 0 = property holds / object found, 1 = refuted / not found,
// 2 = operational error (bad input, capacity, parse failure).

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "zs/json_io.hpp"

using namespace zs;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitError = 2;

json read_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return json::parse(in);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << j.dump(2) << "\n";
        std::cout << j.dump(2) << "\n";
    }
}

std::uint64_t default_budget(std::uint64_t fallback) {
    if (const char* env = std::getenv("ZS_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::runtime_error("ZS_BUDGET must be a positive integer");
    }
    return fallback;
}

json subspace_basis_json(const Subspace& b) {
    json rows = json::array();
    for (const auto& row : b.basis()) rows.push_back(row);
    return rows;
}

int cmd_sumset(const std::string& in) {
    Multiset s = multiset_from_json(read_json(in));
    SumsetImage img = sumset(s);
    Multiset reduced = reduce(s);
    Subspace stab = stabilizer(img);
    json j{{"schema", kSchemaVersion},
           {"p", s.spec.p()},
           {"k", s.spec.k()},
           {"sumset", img.bits.to_indices()},
           {"size", img.size()},
           {"full", img.full()},
           {"is_reduced", is_reduced(s)},
           {"reduced", multiset_to_json(reduced)},
           {"stabilizer_basis", subspace_basis_json(stab)},
           {"stabilizer_dim", stab.dim()}};
    emit(j, "");
    return kExitFound;
}

int cmd_h(int p, int k, std::uint64_t budget, const std::string& out) {
    auto rep = h_exact(p, k, budget);
    emit(hbounds_to_json(rep), out);
    return rep.exact ? kExitFound : kExitNotFound;
}

int cmd_pack(const std::string& in, int t, const std::string& out) {
    Multiset s = multiset_from_json(read_json(in));
    auto packing = pack_disjoint_bases(s, t);
    if (!packing) {
        emit(json{{"schema", kSchemaVersion}, {"t", t}, {"packing", nullptr}}, out);
        return kExitNotFound;
    }
    json j = packing_to_json(*packing);
    j["t"] = t;
    j["verified"] = verify_packing(s, t, *packing);
    emit(j, out);
    return kExitFound;
}

int cmd_basis_test(int p, int k, int ell, int trials, std::uint64_t seed, const std::string& out) {
    auto rep = additive_basis_union_test(p, k, ell, trials, seed);
    emit(basis_union_report_to_json(rep), out);
    return rep.full_fraction == 1.0 ? kExitFound : kExitNotFound;
}

int cmd_cycle(const std::string& in, const std::string& out) {
    WeightedDigraph g = weighting_from_json(read_json(in));
    auto cert = find_zero_sum_cycle_bruteforce(g);
    if (!cert) {
        emit(json{{"schema", kSchemaVersion}, {"cycle", nullptr}}, out);
        return kExitNotFound;
    }
    json j = cycle_cert_to_json(g.spec, *cert);
    j["weighting"] = weighting_to_json(g);
    emit(j, out);
    return kExitFound;
}

int cmd_f(int p, int k, int n, std::uint64_t budget, bool serial, const std::string& checkpoint,
          const std::string& out) {
    GroupSpec spec(p, k);
    auto total_opt = normalized_weighting_count(spec, n);
    if (!total_opt || *total_opt > budget)
        throw std::runtime_error("f: search space exceeds the budget (" + std::to_string(budget) +
                                 "); raise --budget or ZS_BUDGET");
    std::uint64_t total = *total_opt;

    std::uint64_t start = 0;
    std::optional<std::uint64_t> found;
    if (!checkpoint.empty()) {
        std::ifstream in(checkpoint);
        if (in) {
            json cp = json::parse(in);
            auto range = cp.at("range_done").get<std::vector<std::uint64_t>>();
            if (range.size() == 2 && range[0] == 0) start = std::min(range[1], total);
            if (cp.at("verdict_so_far") == "COUNTEREXAMPLE" && cp.contains("counter"))
                found = cp.at("counter").get<std::uint64_t>(); // already decided
        }
    }

    auto write_checkpoint = [&](std::uint64_t done) {
        if (checkpoint.empty()) return;
        json cp{{"schema", kSchemaVersion},
                {"range_done", {std::uint64_t{0}, done}},
                {"verdict_so_far", found ? "COUNTEREXAMPLE" : "ALL_HAVE_CYCLE"}};
        if (found) cp["counter"] = *found;
        std::ofstream out_file(checkpoint);
        out_file << cp.dump(2) << "\n";
    };

    std::uint64_t chunk = std::max<std::uint64_t>(std::uint64_t{1} << 14, total / 64);
    for (std::uint64_t lo = start; lo < total && !found; lo += chunk) {
        std::uint64_t hi = std::min(total, lo + chunk);
        found = serial ? first_zero_sum_free_serial(spec, n, lo, hi)
                       : first_zero_sum_free_parallel(spec, n, lo, hi);
        write_checkpoint(found ? total : hi);
    }

    FVerdict verdict;
    verdict.total = total;
    if (found) {
        verdict.kind = FVerdictKind::Counterexample;
        verdict.counter = *found;
        verdict.counterexample = weighting_from_counter(spec, n, *found);
        verdict.checked = *found + 1;
    } else {
        verdict.kind = FVerdictKind::AllHaveCycle;
        verdict.checked = total;
    }
    emit(fverdict_to_json(verdict, p, k, n), out);
    return found ? kExitNotFound : kExitFound;
}

int cmd_construct(int p, int k, const std::string& out) {
    emit(weighting_to_json(lower_bound_construction(p, k)), out);
    return kExitFound;
}

int cmd_extremal(int p, int k, int n, std::uint64_t seed, std::uint64_t iters,
                 const std::string& out) {
    auto g = extremal_local_search(p, k, n, seed, iters);
    if (!g) {
        emit(json{{"schema", kSchemaVersion}, {"weighting", nullptr}}, out);
        return kExitNotFound;
    }
    emit(weighting_to_json(*g), out);
    return kExitFound;
}

int cmd_gadget_solve(const std::string& in, const std::string& out) {
    WeightedDigraph g = weighting_from_json(read_json(in));
    auto cert = solve_by_gadgets(g);
    if (!cert) {
        emit(json{{"schema", kSchemaVersion}, {"cycle", nullptr}}, out);
        return kExitNotFound;
    }
    json j = cycle_cert_to_json(g.spec, *cert);
    j["weighting"] = weighting_to_json(g);
    j["verified"] = verify_cycle(g, *cert);
    emit(j, out);
    return kExitFound;
}

int cmd_recursion_report(const std::string& in, int t, const std::string& out) {
    WeightedDigraph g = weighting_from_json(read_json(in));
    WeightedDigraph gn = zero_out_vertex(g, 0);
    GadgetFamilyLevels fam = extract_useful_families(gn, 0, t);
    json j = levels_to_json(gn, fam);
    try {
        auto rep = recursion_step_report(gn, fam);
        j["recursion_step"] = recursion_report_to_json(rep);
        emit(j, out);
        return rep.z_size_ok && rep.inclusions_ok ? kExitFound : kExitNotFound;
    } catch (const std::exception& e) {
        j["recursion_step"] = nullptr;
        j["reason"] = e.what();
        emit(j, out);
        return kExitNotFound;
    }
}

int cmd_coeff(const std::string& in, const std::string& out) {
    json input = read_json(in);
    Multiset vectors = multiset_from_json(input);
    std::vector<int> degrees = input.at("degrees").get<std::vector<int>>();
    int coeff = equipartition_coefficient(vectors.spec, vectors.elems, degrees);
    emit(json{{"schema", kSchemaVersion},
              {"p", vectors.spec.p()},
              {"k", vectors.spec.k()},
              {"degrees", degrees},
              {"coefficient", coeff}},
         out);
    return coeff != 0 ? kExitFound : kExitNotFound;
}

int cmd_refute_dim2(const std::string& in, const std::string& out) {
    Multiset s = multiset_from_json(read_json(in));
    auto outcome = refute_reduced_dim2(s);
    json j{{"schema", kSchemaVersion}, {"claim_m", outcome.claim_m}};
    if (outcome.certificate) {
        j["certificate"] = refutation_to_json(*outcome.certificate);
        j["verified"] = verify_refutation(*outcome.certificate);
        emit(j, out);
        return kExitFound;
    }
    j["certificate"] = nullptr;
    j["failure"] = outcome.failure;
    emit(j, out);
    return kExitNotFound;
}

int cmd_bounds(int p, int k, const std::string& out) {
    double log2_10k = std::log2(10.0 * k);
    double log2_2k = std::log2(2.0 * k);
    json j{{"schema", kSchemaVersion},
           {"p", p},
           {"k", k},
           {"f_lower", (p - 1) * k},
           {"h_lower", (p - 1) * k},
           {"h_upper", h_upper_formula(p, k)},
           {"f_upper_general", 600.0 * p * k * log2_10k * log2_10k},
           {"f_upper_p2", 600.0 * k * log2_2k},
           {"f_upper_via_h", 60.0 * log2_2k * h_upper_formula(p, 10 * k)}};
    emit(j, out);
    return kExitFound;
}

int cmd_verify(const std::string& in, const std::string& weighting_path) {
    json j = read_json(in);
    std::string type = j.value("type", "");
    if (type == "refutation") {
        return verify_refutation(refutation_from_json(j)) ? kExitFound : kExitNotFound;
    }
    if (type == "cycle") {
        CycleCertificate cert = cycle_cert_from_json(j);
        json wj;
        if (!weighting_path.empty())
            wj = read_json(weighting_path);
        else if (j.contains("weighting"))
            wj = j.at("weighting");
        else
            throw std::runtime_error("cycle certificate needs a weighting (--weighting or embedded)");
        WeightedDigraph g = weighting_from_json(wj);
        return verify_cycle(g, cert) ? kExitFound : kExitNotFound;
    }
    throw std::runtime_error("unknown certificate type: " + type);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for zero-sum cycles in complete digraphs weighted by Z_p^k"};
    app.require_subcommand(1);

    int p = 2, k = 1, n = 2, t = 1, ell = 1, trials = 100;
    std::uint64_t seed = 0, iters = 100000, budget = 0;
    std::string in = "-", out, checkpoint, weighting_path;
    bool serial = false;

    auto* c_sumset = app.add_subcommand("sumset", "Sumset, reducedness, reduction, stabilizer");
    c_sumset->add_option("--in", in, "multiset JSON file or - for stdin");

    auto* c_h = app.add_subcommand("h", "Exact h_p(k) search with bounds");
    c_h->add_option("--p", p)->required();
    c_h->add_option("--k", k)->required();
    c_h->add_option("--budget", budget, "DFS node budget");
    c_h->add_option("--out", out);

    auto* c_pack = app.add_subcommand("pack", "Disjoint base packing");
    c_pack->add_option("--in", in);
    c_pack->add_option("--t", t, "number of bases")->required();
    c_pack->add_option("--out", out);

    auto* c_basis = app.add_subcommand("basis-test", "Random additive-basis union trials");
    c_basis->add_option("--p", p)->required();
    c_basis->add_option("--k", k)->required();
    c_basis->add_option("--l", ell, "bases per union")->required();
    c_basis->add_option("--trials", trials);
    c_basis->add_option("--seed", seed);
    c_basis->add_option("--out", out);

    auto* c_cycle = app.add_subcommand("cycle", "Brute-force zero-sum cycle search");
    c_cycle->add_option("--in", in);
    c_cycle->add_option("--out", out);

    auto* c_f = app.add_subcommand("f", "Exhaustive verdict over normalized weightings");
    c_f->add_option("--p", p)->required();
    c_f->add_option("--k", k)->required();
    c_f->add_option("--n", n)->required();
    c_f->add_option("--budget", budget, "max weightings to enumerate");
    c_f->add_option("--checkpoint", checkpoint, "resumable progress file");
    c_f->add_flag("--serial", serial, "use the serial scan kernel");
    c_f->add_option("--out", out);

    auto* c_construct = app.add_subcommand("construct", "Zero-sum-free lower-bound weighting");
    c_construct->add_option("--p", p)->required();
    c_construct->add_option("--k", k)->required();
    c_construct->add_option("--out", out);

    auto* c_extremal = app.add_subcommand("extremal", "Randomized zero-sum-free weighting search");
    c_extremal->add_option("--p", p)->required();
    c_extremal->add_option("--k", k)->required();
    c_extremal->add_option("--n", n)->required();
    c_extremal->add_option("--seed", seed);
    c_extremal->add_option("--iters", iters);
    c_extremal->add_option("--out", out);

    auto* c_solve = app.add_subcommand("gadget-solve", "Gadget-based zero-sum cycle solver");
    c_solve->add_option("--in", in);
    c_solve->add_option("--out", out);

    auto* c_rec = app.add_subcommand("recursion-report", "Extraction levels and recursion step");
    c_rec->add_option("--in", in);
    c_rec->add_option("--t", t, "number of extraction levels")->default_val(3);
    c_rec->add_option("--out", out);

    auto* c_coeff = app.add_subcommand("coeff", "Multidegree coefficient of a vector product");
    c_coeff->add_option("--in", in, "multiset JSON with an extra degrees array");
    c_coeff->add_option("--out", out);

    auto* c_refute = app.add_subcommand("refute-dim2", "Reducedness refutation over Z_p^2");
    c_refute->add_option("--in", in);
    c_refute->add_option("--out", out);

    auto* c_bounds = app.add_subcommand("bounds", "Bound table for (p, k)");
    c_bounds->add_option("--p", p)->required();
    c_bounds->add_option("--k", k)->required();
    c_bounds->add_option("--out", out);

    auto* c_verify = app.add_subcommand("verify", "Replay a certificate file");
    c_verify->add_option("--in", in)->required();
    c_verify->add_option("--weighting", weighting_path, "weighting JSON for cycle certificates");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_sumset->parsed()) return cmd_sumset(in);
        if (c_h->parsed())
            return cmd_h(p, k, budget ? budget : default_budget(50'000'000), out);
        if (c_pack->parsed()) return cmd_pack(in, t, out);
        if (c_basis->parsed()) return cmd_basis_test(p, k, ell, trials, seed, out);
        if (c_cycle->parsed()) return cmd_cycle(in, out);
        if (c_f->parsed())
            return cmd_f(p, k, n, budget ? budget : default_budget(std::uint64_t{1} << 26), serial,
                         checkpoint, out);
        if (c_construct->parsed()) return cmd_construct(p, k, out);
        if (c_extremal->parsed()) return cmd_extremal(p, k, n, seed, iters, out);
        if (c_solve->parsed()) return cmd_gadget_solve(in, out);
        if (c_rec->parsed()) return cmd_recursion_report(in, t, out);
        if (c_coeff->parsed()) return cmd_coeff(in, out);
        if (c_refute->parsed()) return cmd_refute_dim2(in, out);
        if (c_bounds->parsed()) return cmd_bounds(p, k, out);
        if (c_verify->parsed()) return cmd_verify(in, weighting_path);
        std::cerr << "no subcommand\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << json{{"schema", kSchemaVersion}, {"error", e.what()}}.dump() << "\n";
        return kExitError;
    }
}
