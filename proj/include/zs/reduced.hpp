#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zs/sumset.hpp"

namespace zs {

/// Bounds and (when the search finishes) the exact value of h_p(k), the
/// largest size of a reduced multiset in Z_p^k.
struct HBoundsReport {
    int p = 0;
    int k = 0;
    int lower = 0;            // k(p-1)
    double upper = 0.0;       // (p-1)(log2 k + 1) k
    std::optional<int> exact;
    std::optional<Multiset> witness; // reduced, |witness| = exact (or best found)
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

// k(p-1) copies witness: p-1 copies of each elementary basis vector.
Multiset h_lower_witness(int p, int k);

double h_upper_formula(int p, int k);

// Integer upper bound on h_p(k): exact for p = 2 and k = 1, otherwise the
// floor of the general formula.
int h_upper_int(int p, int k);

// Exact h_p(k) by canonical-order DFS over reduced multisets. The budget
// caps visited nodes; on exhaustion `exact` is absent and `witness` holds
// the best multiset found.
HBoundsReport h_exact(int p, int k, std::uint64_t budget = 50'000'000);

// Coefficient of prod_i z_i^{degrees[i]} in prod_j (sum_i vectors[j][i] z_i),
// over F_p, by multidegree dynamic programming. Requires sum(degrees) == |vectors|.
int equipartition_coefficient(const GroupSpec& spec, const std::vector<elem_t>& vectors,
                              const std::vector<int>& degrees);

// One-directional full-sumset certificate: |S| must equal k(p-1); a nonzero
// balanced coefficient implies Sigma(S) is the whole group. False is
// inconclusive.
bool full_sumset_by_coefficient(const Multiset& s);

/// A proper sub-multiset with the same sumset as its parent, witnessing
/// that the parent is not reduced.
struct RefutationCertificate {
    Multiset input;
    Multiset proper_subset;
    std::uint64_t shared_sumset_size = 0;
};

struct RefutationOutcome {
    std::optional<RefutationCertificate> certificate;
    int claim_m = -1;      // recomputed max line intersection after the greedy phase
    std::string failure;   // non-empty when the procedure could not complete
};

// The h_p(2) < 5(p-1)/2 refutation procedure for p >= 7. Preconditions
// (throws on violation): |S| = 5(p-1)/2, 0 not in S, every line through the
// origin contains at most p-1 elements of S.
RefutationOutcome refute_reduced_dim2(const Multiset& s);

bool verify_refutation(const RefutationCertificate& cert);

} // namespace zs
