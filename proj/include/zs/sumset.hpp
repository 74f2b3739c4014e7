#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zs/group.hpp"

namespace zs {

/// Membership bitmap over the p^k element indices of a group.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::uint64_t universe);

    void set(elem_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(elem_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::uint64_t universe() const { return universe_; }
    std::uint64_t count() const;
    std::vector<elem_t> to_indices() const;

    bool operator==(const IndexSet& o) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(static_cast<elem_t>((w << 6) + static_cast<std::uint64_t>(b)));
                bits &= bits - 1;
            }
        }
    }

private:
    std::uint64_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A multiset of group elements, kept sorted by canonical index.
struct Multiset {
    GroupSpec spec;
    std::vector<elem_t> elems;

    Multiset(GroupSpec s, std::vector<elem_t> e);
    std::size_t size() const { return elems.size(); }
};

/// The bitmap of subset sums of a multiset. Always contains 0.
struct SumsetImage {
    GroupSpec spec;
    IndexSet bits;

    std::uint64_t size() const { return bits.count(); }
    bool full() const { return bits.count() == spec.order(); }
};

// Exact sumset, built incrementally: Image(S + {s}) = Image(S) union (s + Image(S)).
SumsetImage sumset(const Multiset& s);

// Shift every member of x by s.
IndexSet shifted(const GroupSpec& spec, const IndexSet& x, elem_t s);

// A sub-multiset of S summing to target, or nullopt if target is not in
// Sigma(S). Deterministic: back-pointers over the incremental DP in
// canonical element order; target 0 always yields the empty sub-multiset.
std::optional<Multiset> subset_sum_witness(const Multiset& s, elem_t target);

// As above, but over an explicitly ordered value sequence; returns the set
// of positions used.
std::optional<std::vector<std::size_t>> subset_sum_positions(const GroupSpec& spec,
                                                             const std::vector<elem_t>& values,
                                                             elem_t target);

// True iff removing any single element strictly shrinks |Sigma(S)|.
bool is_reduced(const Multiset& s);

// A reduced sub-multiset with the same sumset, scanning candidates for
// removal in descending canonical order until a fixpoint.
Multiset reduce(const Multiset& s);

// The stabilizer subgroup {x : x + X = X} of a sumset image. Requires
// 0 in X; throws if the collected candidates are not a subgroup (which
// indicates X did not come from a sumset).
Subspace stabilizer(const SumsetImage& x);

} // namespace zs
