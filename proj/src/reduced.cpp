#include "zs/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace zs {

Multiset h_lower_witness(int p, int k) {
    GroupSpec spec(p, k);
    std::vector<elem_t> elems;
    elems.reserve(static_cast<std::size_t>(k) * (p - 1));
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < p - 1; ++c) elems.push_back(spec.unit(i));
    return Multiset(std::move(spec), std::move(elems));
}

double h_upper_formula(int p, int k) {
    return (p - 1) * (std::log2(static_cast<double>(k)) + 1.0) * k;
}

int h_upper_int(int p, int k) {
    if (p == 2) return k;
    if (k == 1) return p - 1;
    return static_cast<int>(std::floor(h_upper_formula(p, k) + 1e-9));
}

namespace {

// Canonical representative of the line through e: the smallest nonzero
// multiple of e.
elem_t line_rep(const GroupSpec& spec, elem_t e) {
    elem_t best = e;
    for (int c = 2; c < spec.p(); ++c) best = std::min(best, spec.scale(e, c));
    return best;
}

struct HSearch {
    const GroupSpec& spec;
    int depth_cap;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<elem_t> current;
    std::vector<int> line_count; // per line representative
    std::vector<elem_t> best;

    void dfs(elem_t min_elem) {
        if (current.size() > best.size()) best = current;
        if (static_cast<int>(current.size()) >= depth_cap) return;
        for (elem_t e = min_elem; e < spec.order(); ++e) {
            if (exhausted) return;
            if (++nodes > budget) {
                exhausted = true;
                return;
            }
            elem_t line = line_rep(spec, e);
            if (line_count[line] >= spec.p() - 1) continue;
            current.push_back(e);
            // Every prefix of a reduced multiset is reduced, so reducedness
            // of the extension is a valid pruning test.
            if (is_reduced(Multiset(spec, current))) {
                ++line_count[line];
                dfs(e);
                --line_count[line];
            }
            current.pop_back();
        }
    }
};

} // namespace

HBoundsReport h_exact(int p, int k, std::uint64_t budget) {
    GroupSpec spec(p, k);
    HBoundsReport rep;
    rep.p = p;
    rep.k = k;
    rep.lower = k * (p - 1);
    rep.upper = h_upper_formula(p, k);

    HSearch search{spec, h_upper_int(p, k), budget, 0, false, {}, {}, {}};
    search.line_count.assign(spec.order(), 0);
    search.dfs(1);

    rep.nodes = search.nodes;
    rep.budget_exhausted = search.exhausted;
    rep.witness = Multiset(spec, search.best);
    if (!search.exhausted) rep.exact = static_cast<int>(search.best.size());
    return rep;
}

int equipartition_coefficient(const GroupSpec& spec, const std::vector<elem_t>& vectors,
                              const std::vector<int>& degrees) {
    int k = spec.k(), p = spec.p();
    if (static_cast<int>(degrees.size()) != k)
        throw std::invalid_argument("equipartition_coefficient: degree vector length mismatch");
    long long total = 0;
    for (int d : degrees) {
        if (d < 0) throw std::invalid_argument("equipartition_coefficient: negative degree");
        total += d;
    }
    if (total != static_cast<long long>(vectors.size()))
        throw std::invalid_argument("equipartition_coefficient: degrees must sum to the number of vectors");

    // DP over partial multidegrees, one linear factor at a time.
    std::vector<std::size_t> stride(k);
    std::size_t states = 1;
    for (int i = 0; i < k; ++i) {
        stride[i] = states;
        states *= static_cast<std::size_t>(degrees[i] + 1);
    }
    std::vector<int> dp(states, 0), next(states, 0);
    dp[0] = 1;
    std::vector<std::vector<int>> coords;
    coords.reserve(vectors.size());
    for (elem_t v : vectors) coords.push_back(spec.coords(v));

    for (const auto& c : coords) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t s = 0; s < states; ++s) {
            if (dp[s] == 0) continue;
            for (int i = 0; i < k; ++i) {
                if (c[i] == 0) continue;
                int di = static_cast<int>(s / stride[i] % static_cast<std::size_t>(degrees[i] + 1));
                if (di == degrees[i]) continue;
                std::size_t ns = s + stride[i];
                next[ns] = (next[ns] + dp[s] * c[i]) % p;
            }
        }
        dp.swap(next);
    }
    return dp[states - 1];
}

bool full_sumset_by_coefficient(const Multiset& s) {
    int p = s.spec.p(), k = s.spec.k();
    if (s.size() != static_cast<std::size_t>(k) * (p - 1))
        throw std::invalid_argument("full_sumset_by_coefficient: |S| must equal k(p-1)");
    std::vector<int> degrees(k, p - 1);
    return equipartition_coefficient(s.spec, s.elems, degrees) != 0;
}

namespace {

// One copy of each element of `remove` taken out of `from`.
std::vector<elem_t> multiset_minus(const GroupSpec& spec, std::vector<elem_t> from,
                                   const std::vector<elem_t>& remove) {
    for (elem_t r : remove) {
        auto it = std::find(from.begin(), from.end(), r);
        if (it == from.end()) throw std::logic_error("multiset_minus: element not present");
        from.erase(it);
    }
    (void)spec;
    return from;
}

std::vector<elem_t> directions(const GroupSpec& spec) {
    // The p+1 lines of Z_p^2: (1, t) for t in [0, p) and (0, 1).
    std::vector<elem_t> reps;
    for (int t = 0; t < spec.p(); ++t) reps.push_back(spec.index({1, t}));
    reps.push_back(spec.index({0, 1}));
    return reps;
}

int count_on_line(const GroupSpec& spec, const std::vector<elem_t>& elems, elem_t dir) {
    int c = 0;
    for (elem_t e : elems)
        if (line_rep(spec, e) == line_rep(spec, dir)) ++c;
    return c;
}

} // namespace

RefutationOutcome refute_reduced_dim2(const Multiset& s) {
    const GroupSpec& spec = s.spec;
    int p = spec.p();
    if (spec.k() != 2) throw std::invalid_argument("refute_reduced_dim2: group must be Z_p^2");
    if (p < 7) throw std::invalid_argument("refute_reduced_dim2: requires p >= 7");
    std::size_t want = static_cast<std::size_t>(5 * (p - 1) / 2);
    if (s.size() != want)
        throw std::invalid_argument("refute_reduced_dim2: |S| must equal 5(p-1)/2");
    if (!s.elems.empty() && s.elems.front() == 0)
        throw std::invalid_argument("refute_reduced_dim2: S must not contain 0");
    auto dirs = directions(spec);
    for (elem_t d : dirs)
        if (count_on_line(spec, s.elems, d) > p - 1)
            throw std::invalid_argument("refute_reduced_dim2: a line carries more than p-1 elements");

    RefutationOutcome out;

    // Direction of minimal multiset intersection; it meets S in at most 2
    // elements since |S| < 3(p+1).
    elem_t vmin = dirs[0];
    int cmin = count_on_line(spec, s.elems, dirs[0]);
    for (elem_t d : dirs) {
        int c = count_on_line(spec, s.elems, d);
        if (c < cmin) {
            cmin = c;
            vmin = d;
        }
    }

    // Injective map sending the sparse direction to (0,1): with u the
    // smallest vector off the line, M = [u v]^{-1} sends u -> (1,0), v -> (0,1).
    elem_t u = 0;
    for (elem_t cand = 1; cand < spec.order(); ++cand) {
        if (line_rep(spec, cand) != line_rep(spec, vmin)) {
            u = cand;
            break;
        }
    }
    auto uc = spec.coords(u), vc = spec.coords(vmin);
    LinearMap columns(spec, {{uc[0], vc[0]}, {uc[1], vc[1]}});
    LinearMap fwd = inverse(columns);
    LinearMap bwd = columns;

    std::vector<elem_t> mapped;
    mapped.reserve(s.size());
    for (elem_t e : s.elems) mapped.push_back(fwd.apply(e));

    // Greedy phase: p-1 vectors off the (0,1) line, each maximizing the
    // current line intersection; ties broken by smallest canonical index.
    elem_t vert = spec.index({0, 1});
    std::vector<elem_t> pool;
    for (elem_t e : mapped)
        if (line_rep(spec, e) != vert) pool.push_back(e);
    std::sort(pool.begin(), pool.end());

    std::vector<elem_t> chosen;
    for (int i = 0; i < p - 1; ++i) {
        if (pool.empty()) {
            out.failure = "greedy phase ran out of candidates";
            return out;
        }
        elem_t best = 0;
        int best_count = -1;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (j > 0 && pool[j] == pool[j - 1]) continue;
            int c = count_on_line(spec, pool, pool[j]);
            if (c > best_count) {
                best_count = c;
                best = pool[j];
            }
        }
        chosen.push_back(best);
        pool.erase(std::find(pool.begin(), pool.end(), best));
    }

    std::vector<elem_t> remaining = multiset_minus(spec, mapped, chosen);
    std::sort(remaining.begin(), remaining.end());
    int m = 0;
    for (elem_t d : dirs) m = std::max(m, count_on_line(spec, remaining, d));
    out.claim_m = m;

    // Extension phase: keep the generalized coefficient nonzero while
    // growing to 2(p-1) vectors.
    for (int t = 1; t <= p - 1; ++t) {
        bool found = false;
        for (std::size_t j = 0; j < remaining.size() && !found; ++j) {
            if (j > 0 && remaining[j] == remaining[j - 1]) continue;
            std::vector<elem_t> cand = chosen;
            cand.push_back(remaining[j]);
            if (equipartition_coefficient(spec, cand, {p - 1, t}) != 0) {
                chosen = std::move(cand);
                remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(j));
                found = true;
            }
        }
        if (!found) {
            out.failure = "no coefficient-preserving extension at step " + std::to_string(t);
            return out;
        }
    }

    std::vector<elem_t> back;
    back.reserve(chosen.size());
    for (elem_t e : chosen) back.push_back(bwd.apply(e));
    Multiset sub(spec, std::move(back));
    std::uint64_t shared = sumset(sub).size();
    out.certificate = RefutationCertificate{s, std::move(sub), shared};
    if (!verify_refutation(*out.certificate)) {
        out.certificate.reset();
        out.failure = "constructed certificate failed verification";
    }
    return out;
}

bool verify_refutation(const RefutationCertificate& cert) {
    if (cert.proper_subset.size() >= cert.input.size()) return false;
    // Sub-multiset containment by multiplicity accounting.
    std::map<elem_t, int> counts;
    for (elem_t e : cert.input.elems) counts[e]++;
    for (elem_t e : cert.proper_subset.elems)
        if (--counts[e] < 0) return false;
    SumsetImage a = sumset(cert.input);
    SumsetImage b = sumset(cert.proper_subset);
    return a.bits == b.bits && b.size() == cert.shared_sumset_size;
}

} // namespace zs
