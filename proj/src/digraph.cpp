#include "zs/digraph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zs {

WeightedDigraph::WeightedDigraph(GroupSpec s, int vertices)
    : spec(std::move(s)), n(vertices), weights(static_cast<std::size_t>(vertices) * vertices, 0) {
    if (vertices < 2) throw std::invalid_argument("WeightedDigraph: need at least 2 vertices");
}

elem_t cycle_weight(const WeightedDigraph& g, const std::vector<int>& vertices) {
    elem_t sum = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        sum = g.spec.add(sum, g.w(vertices[i], vertices[(i + 1) % vertices.size()]));
    return sum;
}

namespace {

bool extend(int n, std::vector<int>& path, std::vector<bool>& used,
            const std::function<bool(const std::vector<int>&)>& visit) {
    int root = path.front();
    // Close first, then extend in ascending order.
    if (path.size() >= 2) {
        if (!visit(path)) return false;
    }
    for (int next = root + 1; next < n; ++next) {
        if (used[next]) continue;
        used[next] = true;
        path.push_back(next);
        bool go = extend(n, path, used, visit);
        path.pop_back();
        used[next] = false;
        if (!go) return false;
    }
    return true;
}

} // namespace

void enumerate_cycles(int n, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> path;
    std::vector<bool> used(n, false);
    for (int root = 0; root < n - 1; ++root) {
        path.assign(1, root);
        used.assign(n, false);
        used[root] = true;
        if (!extend(n, path, used, visit)) return;
    }
}

std::optional<CycleCertificate> find_zero_sum_cycle_bruteforce(const WeightedDigraph& g, int max_n) {
    if (g.n > max_n)
        throw std::runtime_error("find_zero_sum_cycle_bruteforce: vertex count exceeds enumeration budget");
    std::optional<CycleCertificate> found;
    enumerate_cycles(g.n, [&](const std::vector<int>& cycle) {
        if (cycle_weight(g, cycle) == 0) {
            found = CycleCertificate{cycle, 0};
            return false;
        }
        return true;
    });
    return found;
}

bool verify_cycle(const WeightedDigraph& g, const CycleCertificate& cert) {
    if (cert.vertices.size() < 2) throw std::invalid_argument("verify_cycle: cycle length must be >= 2");
    std::vector<bool> seen(g.n, false);
    for (int v : cert.vertices) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("verify_cycle: vertex out of range");
        if (seen[v]) throw std::invalid_argument("verify_cycle: repeated vertex");
        seen[v] = true;
    }
    elem_t sum = cycle_weight(g, cert.vertices);
    return sum == cert.claimed_sum && sum == 0;
}

WeightedDigraph lower_bound_construction(int p, int k) {
    GroupSpec spec(p, k);
    int n = (p - 1) * k;
    if (n < 2) throw std::invalid_argument("lower_bound_construction: (p-1)k must be at least 2");
    WeightedDigraph g(spec, n);
    for (int u = 0; u < n; ++u) {
        int block = u / (p - 1);
        for (int v = 0; v < n; ++v)
            if (u != v) g.set_w(u, v, spec.unit(block));
    }
    return g;
}

namespace {

// Free edges of a normalized weighting: every (u, v) with u != 0, v != u,
// in (u, v) lexicographic order.
std::vector<std::pair<int, int>> free_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (v != u) edges.emplace_back(u, v);
    return edges;
}

} // namespace

std::optional<std::uint64_t> normalized_weighting_count(const GroupSpec& spec, int n) {
    std::uint64_t total = 1;
    std::uint64_t edges = static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(n - 1);
    for (std::uint64_t e = 0; e < edges; ++e) {
        if (total > std::uint64_t{1} << 62) return std::nullopt;
        total *= spec.order();
    }
    return total;
}

WeightedDigraph weighting_from_counter(const GroupSpec& spec, int n, std::uint64_t counter) {
    WeightedDigraph g(spec, n);
    for (auto [u, v] : free_edges(n)) {
        g.set_w(u, v, static_cast<elem_t>(counter % spec.order()));
        counter /= spec.order();
    }
    return g;
}

std::optional<std::uint64_t> first_zero_sum_free_serial(const GroupSpec& spec, int n,
                                                        std::uint64_t lo, std::uint64_t hi) {
    // Collect cycles once; every weighting reuses the list.
    std::vector<std::vector<int>> cycles;
    enumerate_cycles(n, [&](const std::vector<int>& c) {
        cycles.push_back(c);
        return true;
    });
    for (std::uint64_t counter = lo; counter < hi; ++counter) {
        WeightedDigraph g = weighting_from_counter(spec, n, counter);
        bool has_zero = false;
        for (const auto& c : cycles) {
            if (cycle_weight(g, c) == 0) {
                has_zero = true;
                break;
            }
        }
        if (!has_zero) return counter;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> first_zero_sum_free_parallel(const GroupSpec& spec, int n,
                                                          std::uint64_t lo, std::uint64_t hi) {
    if (hi <= lo) return std::nullopt;
    std::uint64_t span = hi - lo;
    std::uint64_t chunk = std::max<std::uint64_t>(1024, span / 256);
    auto chunks = static_cast<std::int64_t>((span + chunk - 1) / chunk);
    std::uint64_t best = UINT64_MAX;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < chunks; ++i) {
        std::uint64_t clo = lo + static_cast<std::uint64_t>(i) * chunk;
        std::uint64_t cur;
#pragma omp atomic read
        cur = best;
        if (clo >= cur) continue; // a lower counterexample already exists
        std::uint64_t chi = std::min(hi, clo + chunk);
        auto found = first_zero_sum_free_serial(spec, n, clo, chi);
        if (found) {
#pragma omp critical
            best = std::min(best, *found);
        }
    }
    if (best == UINT64_MAX) return std::nullopt;
    return best;
}

FVerdict f_exhaustive(int p, int k, int n, std::uint64_t budget, bool parallel) {
    GroupSpec spec(p, k);
    if (n < 2) throw std::invalid_argument("f_exhaustive: need at least 2 vertices");
    FVerdict verdict;
    auto total = normalized_weighting_count(spec, n);
    if (!total || *total > budget) {
        verdict.kind = FVerdictKind::BudgetExceeded;
        verdict.total = total.value_or(0);
        return verdict;
    }
    verdict.total = *total;
    auto found = parallel ? first_zero_sum_free_parallel(spec, n, 0, *total)
                          : first_zero_sum_free_serial(spec, n, 0, *total);
    if (found) {
        verdict.kind = FVerdictKind::Counterexample;
        verdict.counter = *found;
        verdict.counterexample = weighting_from_counter(spec, n, *found);
        verdict.checked = *found + 1;
    } else {
        verdict.kind = FVerdictKind::AllHaveCycle;
        verdict.checked = *total;
    }
    return verdict;
}

std::optional<WeightedDigraph> extremal_local_search(int p, int k, int n, std::uint64_t seed,
                                                     std::uint64_t iters) {
    GroupSpec spec(p, k);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<elem_t> weight_dist(0, static_cast<elem_t>(spec.order() - 1));

    std::vector<std::vector<int>> cycles;
    enumerate_cycles(n, [&](const std::vector<int>& c) {
        cycles.push_back(c);
        return true;
    });
    // Per-edge incidence for incremental recounts.
    std::vector<std::vector<std::size_t>> touching(static_cast<std::size_t>(n) * n);
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& c = cycles[ci];
        for (std::size_t i = 0; i < c.size(); ++i)
            touching[static_cast<std::size_t>(c[i]) * n + c[(i + 1) % c.size()]].push_back(ci);
    }

    WeightedDigraph g(spec, n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) edges.emplace_back(u, v);
    for (auto [u, v] : edges) g.set_w(u, v, weight_dist(rng));

    std::vector<elem_t> sums(cycles.size());
    std::uint64_t zero_count = 0;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        sums[ci] = cycle_weight(g, cycles[ci]);
        if (sums[ci] == 0) ++zero_count;
    }
    if (zero_count == 0) return g;

    std::uniform_int_distribution<std::size_t> edge_dist(0, edges.size() - 1);
    for (std::uint64_t it = 0; it < iters; ++it) {
        auto [u, v] = edges[edge_dist(rng)];
        elem_t old_w = g.w(u, v);
        elem_t new_w = weight_dist(rng);
        if (new_w == old_w) continue;
        elem_t delta = spec.sub(new_w, old_w);
        const auto& inc = touching[static_cast<std::size_t>(u) * n + v];
        std::int64_t change = 0;
        for (auto ci : inc) {
            if (sums[ci] == 0) --change;
            if (spec.add(sums[ci], delta) == 0) ++change;
        }
        if (change > 0) continue; // strict hill-climbing with sideways moves
        g.set_w(u, v, new_w);
        for (auto ci : inc) sums[ci] = spec.add(sums[ci], delta);
        zero_count = static_cast<std::uint64_t>(static_cast<std::int64_t>(zero_count) + change);
        if (zero_count == 0) return g;
    }
    return std::nullopt;
}

} // namespace zs
