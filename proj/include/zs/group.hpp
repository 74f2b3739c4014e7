#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zs {

// Canonical integer encoding of an element of Z_p^k: sum coords[i] * p^i.
using elem_t = std::uint32_t;

/// The ambient group Z_p^k viewed as the vector space F_p^k.
///
/// All element arithmetic goes through the canonical index encoding,
/// a mixed-radix (little-endian, base p) integer in [0, p^k).
class GroupSpec {
public:
    static constexpr std::uint64_t kDefaultCapacity = std::uint64_t{1} << 24;

    GroupSpec(int p, int k, std::uint64_t capacity = kDefaultCapacity);

    int p() const { return p_; }
    int k() const { return k_; }
    std::uint64_t order() const { return order_; }

    elem_t add(elem_t a, elem_t b) const;
    elem_t sub(elem_t a, elem_t b) const;
    elem_t neg(elem_t a) const;
    elem_t scale(elem_t a, int c) const;

    std::vector<int> coords(elem_t a) const;
    elem_t index(const std::vector<int>& coords) const;
    // Elementary basis vector e_{i+1}, i in [0, k).
    elem_t unit(int i) const;

    bool operator==(const GroupSpec& o) const { return p_ == o.p_ && k_ == o.k_; }

private:
    int p_;
    int k_;
    std::uint64_t order_;
    std::vector<std::uint64_t> pow_;
};

/// A k x k matrix over F_p acting on coordinate vectors.
struct LinearMap {
    GroupSpec spec;
    std::vector<std::vector<int>> matrix; // row-major, entries in [0, p)

    LinearMap(GroupSpec s, std::vector<std::vector<int>> m);
    elem_t apply(elem_t a) const;
};

bool is_injective(const LinearMap& f);
LinearMap inverse(const LinearMap& f); // throws if not injective

// Row-reduce rows over F_p in place; returns pivot columns. Zero rows are removed.
std::vector<int> rref_mod_p(std::vector<std::vector<int>>& rows, int p);

/// A subspace of Z_p^k stored as a reduced row-echelon basis, so equality
/// is structural.
class Subspace {
public:
    static Subspace from_generators(const GroupSpec& spec, const std::vector<elem_t>& gens);

    const GroupSpec& spec() const { return spec_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<int>>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(elem_t a) const;
    // All p^dim elements of the subspace, in ascending index order.
    std::vector<elem_t> enumerate() const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
    Subspace(GroupSpec spec, std::vector<std::vector<int>> basis, std::vector<int> pivots);
    GroupSpec spec_;
    std::vector<std::vector<int>> basis_;
    std::vector<int> pivots_;
};

/// The natural map Z_p^k -> Z_p^k / B, realized as a surjective linear map
/// onto Z_p^{k - dim B} with kernel exactly B. Output coordinates are read
/// off the non-pivot columns of B's row-echelon basis.
class QuotientMap {
public:
    QuotientMap(const GroupSpec& src, Subspace kernel);

    const GroupSpec& src() const { return src_; }
    const GroupSpec& dst() const { return dst_; }
    elem_t apply(elem_t a) const;

private:
    GroupSpec src_;
    GroupSpec dst_;
    Subspace kernel_;
    std::vector<int> free_cols_;
};

// dim of the span of a set of elements (multiplicity irrelevant).
int rank_of(const GroupSpec& spec, const std::vector<elem_t>& elems);

} // namespace zs
