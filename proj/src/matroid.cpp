#include "zs/matroid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zs {

namespace {

bool independent(const GroupSpec& spec, const std::vector<elem_t>& all,
                 const std::vector<std::size_t>& tokens) {
    std::vector<elem_t> vecs;
    vecs.reserve(tokens.size());
    for (auto t : tokens) vecs.push_back(all[t]);
    return rank_of(spec, vecs) == static_cast<int>(tokens.size());
}

struct UnionState {
    const GroupSpec& spec;
    const std::vector<elem_t>& elems; // token -> vector, canonical order
    int t;
    std::vector<int> assign; // token -> set index or -1

    std::vector<std::size_t> set_tokens(int j) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < assign.size(); ++i)
            if (assign[i] == j) out.push_back(i);
        return out;
    }

    bool fits(int j, std::size_t token) const {
        auto toks = set_tokens(j);
        toks.push_back(token);
        return independent(spec, elems, toks);
    }

    bool swap_fits(int j, std::size_t out_token, std::size_t in_token) const {
        auto toks = set_tokens(j);
        toks.erase(std::find(toks.begin(), toks.end(), out_token));
        toks.push_back(in_token);
        return independent(spec, elems, toks);
    }

    // One augmentation attempt from an unassigned token: BFS over the
    // exchange graph where an arc u -> v means "u evicts v from v's set".
    bool augment(std::size_t start) {
        std::size_t n = elems.size();
        std::vector<std::size_t> pred(n, n); // BFS tree, n = unset
        std::vector<bool> seen(n, false);
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (int j = 0; j < t; ++j) {
                if (assign[u] == j) continue;
                if (fits(j, u)) {
                    // Apply the eviction chain from the terminal back to start.
                    std::size_t cur = u;
                    int target = j;
                    while (true) {
                        int prev_set = assign[cur];
                        assign[cur] = target;
                        if (cur == start) break;
                        target = prev_set;
                        cur = pred[cur];
                    }
                    return true;
                }
            }
            for (std::size_t v = 0; v < n; ++v) {
                if (seen[v] || assign[v] < 0 || v == u) continue;
                int j = assign[v];
                if (assign[u] == j) continue;
                if (swap_fits(j, v, u)) {
                    seen[v] = true;
                    pred[v] = u;
                    queue.push_back(v);
                }
            }
        }
        return false;
    }
};

} // namespace

std::optional<BasePacking> pack_disjoint_bases(const Multiset& s, int t) {
    const GroupSpec& spec = s.spec;
    int k = spec.k();
    if (t < 1) throw std::invalid_argument("pack_disjoint_bases: t must be positive");
    if (rank_of(spec, s.elems) != k)
        throw std::invalid_argument("pack_disjoint_bases: multiset is rank-deficient");

    UnionState st{spec, s.elems, t, std::vector<int>(s.elems.size(), -1)};
    std::size_t placed = 0;
    bool progressed = true;
    while (progressed && placed < static_cast<std::size_t>(t) * static_cast<std::size_t>(k)) {
        progressed = false;
        for (std::size_t token = 0; token < s.elems.size(); ++token) {
            if (st.assign[token] >= 0) continue;
            if (st.augment(token)) {
                ++placed;
                progressed = true;
                if (placed == static_cast<std::size_t>(t) * static_cast<std::size_t>(k)) break;
            }
        }
    }
    if (placed < static_cast<std::size_t>(t) * static_cast<std::size_t>(k)) return std::nullopt;

    std::vector<Multiset> bases;
    for (int j = 0; j < t; ++j) {
        std::vector<elem_t> b;
        for (std::size_t i = 0; i < s.elems.size(); ++i)
            if (st.assign[i] == j) b.push_back(s.elems[i]);
        bases.emplace_back(spec, std::move(b));
    }
    std::vector<elem_t> left;
    for (std::size_t i = 0; i < s.elems.size(); ++i)
        if (st.assign[i] < 0) left.push_back(s.elems[i]);
    return BasePacking{std::move(bases), Multiset(spec, std::move(left))};
}

bool packing_condition_bruteforce(const Multiset& s, int t, std::uint64_t budget) {
    const GroupSpec& spec = s.spec;
    // Distinct values with multiplicities; T ranges over multiplicity choices.
    std::vector<elem_t> vals;
    std::vector<int> mult;
    for (elem_t e : s.elems) {
        if (!vals.empty() && vals.back() == e)
            ++mult.back();
        else {
            vals.push_back(e);
            mult.push_back(1);
        }
    }
    std::uint64_t combos = 1;
    for (int m : mult) {
        combos *= static_cast<std::uint64_t>(m + 1);
        if (combos > budget)
            throw std::runtime_error("packing_condition_bruteforce: enumeration budget exceeded");
    }
    int rank_s = rank_of(spec, s.elems);
    auto size_s = static_cast<long long>(s.size());

    std::vector<int> take(vals.size(), 0);
    for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t x = c;
        std::vector<elem_t> sub;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            int m = static_cast<int>(x % static_cast<std::uint64_t>(mult[i] + 1));
            x /= static_cast<std::uint64_t>(mult[i] + 1);
            for (int r = 0; r < m; ++r) sub.push_back(vals[i]);
        }
        long long lhs = size_s - static_cast<long long>(sub.size());
        long long rhs = static_cast<long long>(t) * (rank_s - rank_of(spec, sub));
        if (lhs < rhs) return false;
    }
    return true;
}

bool verify_packing(const Multiset& s, int t, const BasePacking& packing) {
    const GroupSpec& spec = s.spec;
    int k = spec.k();
    if (static_cast<int>(packing.bases.size()) != t) return false;
    std::map<elem_t, int> counts;
    for (elem_t e : s.elems) counts[e]++;
    for (const auto& b : packing.bases) {
        if (b.size() != static_cast<std::size_t>(k)) return false;
        if (rank_of(spec, b.elems) != k) return false;
        for (elem_t e : b.elems)
            if (--counts[e] < 0) return false;
    }
    for (elem_t e : packing.leftover.elems)
        if (--counts[e] < 0) return false;
    for (const auto& [e, c] : counts)
        if (c != 0) return false;
    return true;
}

std::vector<elem_t> random_basis(const GroupSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<elem_t> dist(0, static_cast<elem_t>(spec.order() - 1));
    int k = spec.k();
    while (true) {
        std::vector<elem_t> cand;
        cand.reserve(k);
        for (int i = 0; i < k; ++i) cand.push_back(dist(rng));
        if (rank_of(spec, cand) == k) return cand;
    }
}

BasisUnionReport additive_basis_union_test(int p, int k, int ell, int trials, std::uint64_t seed) {
    if (ell < 1) throw std::invalid_argument("additive_basis_union_test: ell must be positive");
    GroupSpec spec(p, k);
    BasisUnionReport rep;
    rep.p = p;
    rep.k = k;
    rep.ell = ell;
    rep.trials = trials;

    std::vector<char> full(static_cast<std::size_t>(trials), 0);
    std::vector<std::vector<elem_t>> failed(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic)
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<elem_t> elems;
        elems.reserve(static_cast<std::size_t>(ell) * k);
        for (int b = 0; b < ell; ++b) {
            auto basis = random_basis(spec, seed + static_cast<std::uint64_t>(trial) * 1000003 +
                                                static_cast<std::uint64_t>(b));
            elems.insert(elems.end(), basis.begin(), basis.end());
        }
        Multiset u(spec, elems);
        if (sumset(u).full())
            full[static_cast<std::size_t>(trial)] = 1;
        else
            failed[static_cast<std::size_t>(trial)] = std::move(u.elems);
    }

    int ok = 0;
    for (int trial = 0; trial < trials; ++trial) {
        if (full[static_cast<std::size_t>(trial)])
            ++ok;
        else
            rep.failures.emplace_back(spec, std::move(failed[static_cast<std::size_t>(trial)]));
    }
    rep.full_fraction = trials == 0 ? 1.0 : static_cast<double>(ok) / trials;
    return rep;
}

} // namespace zs
