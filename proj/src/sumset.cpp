#include "zs/sumset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace zs {

IndexSet::IndexSet(std::uint64_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

std::uint64_t IndexSet::count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

std::vector<elem_t> IndexSet::to_indices() const {
    std::vector<elem_t> out;
    out.reserve(count());
    for_each([&](elem_t i) { out.push_back(i); });
    return out;
}

Multiset::Multiset(GroupSpec s, std::vector<elem_t> e) : spec(std::move(s)), elems(std::move(e)) {
    for (elem_t x : elems)
        if (x >= spec.order()) throw std::invalid_argument("multiset element outside the group");
    std::sort(elems.begin(), elems.end());
}

IndexSet shifted(const GroupSpec& spec, const IndexSet& x, elem_t s) {
    IndexSet out(x.universe());
    x.for_each([&](elem_t i) { out.set(spec.add(i, s)); });
    return out;
}

SumsetImage sumset(const Multiset& s) {
    IndexSet bits(s.spec.order());
    bits.set(0);
    for (elem_t e : s.elems) {
        IndexSet sh = shifted(s.spec, bits, e);
        bits.for_each([&](elem_t i) { sh.set(i); });
        bits = std::move(sh);
    }
    return SumsetImage{s.spec, std::move(bits)};
}

std::optional<std::vector<std::size_t>> subset_sum_positions(const GroupSpec& spec,
                                                             const std::vector<elem_t>& values,
                                                             elem_t target) {
    if (target >= spec.order()) return std::nullopt;
    // parent[i]: position of the value whose addition first reached index i,
    // -1 for the initial {0}, -2 for unreached.
    std::vector<std::int64_t> parent(spec.order(), -2);
    parent[0] = -1;
    IndexSet reach(spec.order());
    reach.set(0);
    for (std::size_t j = 0; j < values.size(); ++j) {
        IndexSet snapshot = reach;
        snapshot.for_each([&](elem_t i) {
            elem_t ni = spec.add(i, values[j]);
            if (parent[ni] == -2) {
                parent[ni] = static_cast<std::int64_t>(j);
                reach.set(ni);
            }
        });
    }
    if (parent[target] == -2) return std::nullopt;
    std::vector<std::size_t> used;
    elem_t cur = target;
    while (parent[cur] != -1) {
        auto j = static_cast<std::size_t>(parent[cur]);
        used.push_back(j);
        cur = spec.sub(cur, values[j]);
    }
    std::reverse(used.begin(), used.end());
    return used;
}

std::optional<Multiset> subset_sum_witness(const Multiset& s, elem_t target) {
    auto pos = subset_sum_positions(s.spec, s.elems, target);
    if (!pos) return std::nullopt;
    std::vector<elem_t> picked;
    picked.reserve(pos->size());
    for (auto j : *pos) picked.push_back(s.elems[j]);
    return Multiset(s.spec, std::move(picked));
}

namespace {

Multiset without_one(const Multiset& s, std::size_t pos) {
    std::vector<elem_t> rest;
    rest.reserve(s.elems.size() - 1);
    for (std::size_t i = 0; i < s.elems.size(); ++i)
        if (i != pos) rest.push_back(s.elems[i]);
    return Multiset(s.spec, std::move(rest));
}

} // namespace

bool is_reduced(const Multiset& s) {
    std::uint64_t full = sumset(s).size();
    // One representative per distinct value suffices.
    for (std::size_t i = 0; i < s.elems.size(); ++i) {
        if (i > 0 && s.elems[i] == s.elems[i - 1]) continue;
        if (sumset(without_one(s, i)).size() == full) return false;
    }
    return true;
}

Multiset reduce(const Multiset& s) {
    Multiset cur = s;
    std::uint64_t target = sumset(cur).size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = cur.elems.size(); i-- > 0;) {
            if (i + 1 < cur.elems.size() && cur.elems[i] == cur.elems[i + 1]) continue;
            Multiset cand = without_one(cur, i);
            if (sumset(cand).size() == target) {
                cur = std::move(cand);
                changed = true;
            }
        }
    }
    return cur;
}

Subspace stabilizer(const SumsetImage& x) {
    if (!x.bits.test(0)) throw std::invalid_argument("stabilizer: image must contain 0");
    const GroupSpec& spec = x.spec;
    // B is contained in X (shift 0 by any b in B stays in X), so candidates
    // need only range over X itself.
    std::vector<elem_t> members;
    x.bits.for_each([&](elem_t cand) {
        if (shifted(spec, x.bits, cand) == x.bits) members.push_back(cand);
    });
    Subspace sub = Subspace::from_generators(spec, members);
    std::uint64_t expect = 1;
    for (int i = 0; i < sub.dim(); ++i) expect *= static_cast<std::uint64_t>(spec.p());
    if (expect != members.size())
        throw std::runtime_error("stabilizer: candidate set is not closed under the subgroup laws");
    return sub;
}

} // namespace zs
