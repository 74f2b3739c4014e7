#pragma once

#include <cstdint>
#include <optional>

#include "zs/sumset.hpp"

namespace zs {

/// A decomposition of a full-rank multiset into t pairwise disjoint bases
/// of its span, plus the unused leftovers.
struct BasePacking {
    std::vector<Multiset> bases;
    Multiset leftover;
};

// Matroid-union augmentation over the linear matroid of F_p^k vectors.
// Elements are lifted to (element, copy) tokens; augmenting paths are found
// breadth-first in canonical token order, so the result is deterministic.
// Returns a packing iff one exists. Throws if S is rank-deficient or t < 1.
std::optional<BasePacking> pack_disjoint_bases(const Multiset& s, int t);

// Edmonds' packing condition checked by enumerating every sub-multiset T:
// |S| - |T| >= t (rank S - rank T). Throws if the enumeration exceeds the
// budget.
bool packing_condition_bruteforce(const Multiset& s, int t, std::uint64_t budget = std::uint64_t{1} << 20);

// Structural check of a returned packing against its source multiset.
bool verify_packing(const Multiset& s, int t, const BasePacking& packing);

struct BasisUnionReport {
    int p = 0;
    int k = 0;
    int ell = 0;
    int trials = 0;
    double full_fraction = 0.0;
    std::vector<Multiset> failures; // unions whose sumset was not the full group
};

// Samples `trials` multiset unions of ell uniformly random ordered bases of
// Z_p^k and reports the fraction with full sumset. Per-trial seeds are
// seed + trial index, so the result is independent of scheduling.
BasisUnionReport additive_basis_union_test(int p, int k, int ell, int trials, std::uint64_t seed);

// A uniformly random ordered basis of Z_p^k (rejection sampling).
std::vector<elem_t> random_basis(const GroupSpec& spec, std::uint64_t seed);

} // namespace zs
