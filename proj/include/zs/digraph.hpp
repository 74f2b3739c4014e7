#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "zs/sumset.hpp"

namespace zs {

/// A complete digraph on n vertices with a Z_p^k weight on every ordered
/// pair of distinct vertices. The diagonal is unused and kept at 0.
struct WeightedDigraph {
    GroupSpec spec;
    int n = 0;
    std::vector<elem_t> weights; // row-major n x n

    WeightedDigraph(GroupSpec s, int vertices);
    elem_t w(int u, int v) const { return weights[static_cast<std::size_t>(u) * n + v]; }
    void set_w(int u, int v, elem_t x) { weights[static_cast<std::size_t>(u) * n + v] = x; }
};

/// A directed cycle given by its distinct vertices in traversal order,
/// together with the sum it claims to achieve.
struct CycleCertificate {
    std::vector<int> vertices; // length >= 2
    elem_t claimed_sum = 0;
};

elem_t cycle_weight(const WeightedDigraph& g, const std::vector<int>& vertices);

// Enumerates every simple directed cycle (length >= 2, both 2-cycle
// orientations counted separately) in canonical order: cycles are rooted at
// their smallest vertex and extended in ascending vertex order, closing
// before extending. Returns false from the visitor to stop early.
void enumerate_cycles(int n, const std::function<bool(const std::vector<int>&)>& visit);

// The first zero-sum cycle in canonical enumeration order, or nullopt.
// Throws when n exceeds the enumeration budget.
std::optional<CycleCertificate> find_zero_sum_cycle_bruteforce(const WeightedDigraph& g,
                                                               int max_n = 9);

// Recomputes the cycle sum. Throws on malformed certificates (repeated or
// out-of-range vertices, length < 2); returns false when the sum is nonzero
// or the claimed sum does not match.
bool verify_cycle(const WeightedDigraph& g, const CycleCertificate& cert);

// The (p-1)k-vertex zero-sum-free weighting: vertices split into k
// consecutive blocks of size p-1, every edge leaving block i weighted e_i.
WeightedDigraph lower_bound_construction(int p, int k);

enum class FVerdictKind { AllHaveCycle, Counterexample, BudgetExceeded };

struct FVerdict {
    FVerdictKind kind = FVerdictKind::BudgetExceeded;
    std::optional<WeightedDigraph> counterexample;
    std::uint64_t counter = 0;       // counter index of the counterexample
    std::uint64_t total = 0;         // normalized weightings in the search space
    std::uint64_t checked = 0;
};

// Number of normalized weightings: |A|^((n-1)^2). Returns nullopt on overflow.
std::optional<std::uint64_t> normalized_weighting_count(const GroupSpec& spec, int n);

// Decode a mixed-radix counter into a normalized weighting (out-edges of
// vertex 0 fixed to 0; remaining edges in (u,v) lexicographic order, edge 0
// least significant).
WeightedDigraph weighting_from_counter(const GroupSpec& spec, int n, std::uint64_t counter);

// Serial kernel: the lowest counter in [lo, hi) whose weighting has no
// zero-sum cycle, or nullopt if all have one.
std::optional<std::uint64_t> first_zero_sum_free_serial(const GroupSpec& spec, int n,
                                                        std::uint64_t lo, std::uint64_t hi);

// OpenMP version of the scan; result is identical to the serial kernel
// (lowest qualifying counter wins regardless of scheduling).
std::optional<std::uint64_t> first_zero_sum_free_parallel(const GroupSpec& spec, int n,
                                                          std::uint64_t lo, std::uint64_t hi);

// Exhaustive verdict over all normalized weightings on n vertices.
FVerdict f_exhaustive(int p, int k, int n, std::uint64_t budget, bool parallel = true);

// Randomized hill-climbing for a zero-sum-free weighting: repeatedly
// re-roll one edge, keeping moves that do not increase the number of
// zero-sum cycles. Fully reproducible from the seed.
std::optional<WeightedDigraph> extremal_local_search(int p, int k, int n, std::uint64_t seed,
                                                     std::uint64_t iters);

} // namespace zs
