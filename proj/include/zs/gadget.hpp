#pragma once

#include <optional>
#include <string>

#include "zs/digraph.hpp"

namespace zs {

/// Two directed paths P and Q from u to v; the value w(Q) - w(P) is what a
/// cycle gains by routing through Q instead of P.
struct Gadget {
    int u = 0;
    int v = 0;
    std::vector<int> path_p; // vertex sequence, starts at u, ends at v
    std::vector<int> path_q;

    std::vector<int> vertices() const; // V(P) union V(Q), sorted
};

elem_t gadget_value(const WeightedDigraph& g, const Gadget& gadget);

// Reweighting with all out-edges of v0 set to zero, in closed form:
// w'(xy) = w(xy) + w(v0 x) - w(v0 y). Cycle weights and gadget values are
// unchanged.
WeightedDigraph zero_out_vertex(const WeightedDigraph& g, int v0);

/// One saturation level of the extraction: the adopted gadgets, their value
/// multiset U_i, its sumset, the stabilizer B_i and its dimension, and the
/// non-root vertices the level occupies.
struct FamilyLevel {
    std::vector<Gadget> gadgets;
    Multiset values;
    SumsetImage sum;
    Subspace stab;
    int dim = 0;
    std::vector<int> vertices;
};

struct GadgetFamilyLevels {
    int v0 = 0;
    std::vector<FamilyLevel> levels;
};

// Greedy level-by-level extraction of 3-vertex gadgets through v0 from a
// weighting normalized at v0 (throws otherwise). A gadget ({v0,x,y},
// P = v0 y, Q = v0 x y) is adopted iff its value strictly enlarges the
// level's sumset; on saturation the value multiset is reduced and the
// vertices of dropped gadgets are released. Truncates (with fewer than t
// levels) when fewer than two free vertices remain would be needed; levels
// whose pool is exhausted come back empty.
GadgetFamilyLevels extract_useful_families(const WeightedDigraph& g, int v0, int t);

// Every remaining edge outside {v0} and the first i levels has weight in
// B_i — the consequence of greedy saturation the pipeline relies on.
bool check_saturation_predicate(const WeightedDigraph& g, const GadgetFamilyLevels& fam,
                                std::size_t level);

// Subset-sum assembly: picks a subset I of gadgets via subset-sum over
// their values and threads Q_i (i in I) or P_i (otherwise) into one cycle.
// Requires pairwise vertex-disjoint gadgets; throws "insufficient gadget
// richness" when the needed target is not in the value sumset.
CycleCertificate cycle_from_gadgets(const WeightedDigraph& g, const std::vector<Gadget>& gadgets);

// Full pipeline: normalize at vertex 0, extract levels, and when a level's
// sumset stalls at its own stabilizer subgroup (with all remaining edge
// weights inside it) assemble a certificate from vertex-disjoint gadgets in
// the remaining graph. Sound but incomplete: absence is a legitimate
// outcome and every returned certificate verifies against the original
// weighting.
std::optional<CycleCertificate> solve_by_gadgets(const WeightedDigraph& g);

/// One recursion step: selection of the level m, the minimal quotient
/// sub-families X_j / Y_j, the vertex set Z they span, and the checked
/// size / inclusion / edge-membership predicates.
struct RecursionStepReport {
    int m = 0;
    int k = 0;
    std::vector<int> dims;
    std::vector<int> x_sizes;
    std::vector<int> y_sizes;
    std::vector<int> z_vertices;
    int z_bound = 0;            // 6 m h_p(k - d_m)
    bool z_size_ok = false;
    bool inclusions_ok = false; // Sigma(U_j) inside Sigma(X_j u U_m) and (Y_j u U_{m-1})
    bool edges_ok = false;      // every edge outside Z has weight in B_{m-2}
    std::vector<std::pair<int, int>> violating_edges;
};

// Requires at least 3 levels with strictly decreasing stabilizer dimensions
// (all below k); throws otherwise, or when no admissible m exists.
RecursionStepReport recursion_step_report(const WeightedDigraph& g, const GadgetFamilyLevels& fam);

} // namespace zs
