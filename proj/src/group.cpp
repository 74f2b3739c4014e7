#include "zs/group.hpp"

#include <algorithm>

namespace zs {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int mod_inverse(int a, int p) {
    // Fermat: a^(p-2) mod p, p prime.
    long long r = 1, b = a % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<int>(r);
}

} // namespace

GroupSpec::GroupSpec(int p, int k, std::uint64_t capacity) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("GroupSpec: p must be prime, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("GroupSpec: k must be positive");
    pow_.resize(k + 1);
    pow_[0] = 1;
    for (int i = 1; i <= k; ++i) {
        pow_[i] = pow_[i - 1] * static_cast<std::uint64_t>(p);
        if (pow_[i] > capacity)
            throw std::invalid_argument("GroupSpec: p^k exceeds capacity");
    }
    order_ = pow_[k];
}

elem_t GroupSpec::add(elem_t a, elem_t b) const {
    elem_t r = 0;
    for (int i = 0; i < k_; ++i) {
        auto pw = static_cast<elem_t>(pow_[i]);
        int da = static_cast<int>(a / pw) % p_;
        int db = static_cast<int>(b / pw) % p_;
        r += static_cast<elem_t>((da + db) % p_) * pw;
    }
    return r;
}

elem_t GroupSpec::neg(elem_t a) const {
    elem_t r = 0;
    for (int i = 0; i < k_; ++i) {
        auto pw = static_cast<elem_t>(pow_[i]);
        int da = static_cast<int>(a / pw) % p_;
        r += static_cast<elem_t>((p_ - da) % p_) * pw;
    }
    return r;
}

elem_t GroupSpec::sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

elem_t GroupSpec::scale(elem_t a, int c) const {
    c %= p_;
    if (c < 0) c += p_;
    elem_t r = 0;
    for (int i = 0; i < k_; ++i) {
        auto pw = static_cast<elem_t>(pow_[i]);
        int da = static_cast<int>(a / pw) % p_;
        r += static_cast<elem_t>(da * c % p_) * pw;
    }
    return r;
}

std::vector<int> GroupSpec::coords(elem_t a) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<int>(a % static_cast<elem_t>(p_));
        a /= static_cast<elem_t>(p_);
    }
    return c;
}

elem_t GroupSpec::index(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != k_)
        throw std::invalid_argument("element has wrong number of coordinates");
    elem_t r = 0;
    for (int i = k_ - 1; i >= 0; --i) {
        if (coords[i] < 0 || coords[i] >= p_)
            throw std::invalid_argument("coordinate out of range [0, p)");
        r = r * static_cast<elem_t>(p_) + static_cast<elem_t>(coords[i]);
    }
    return r;
}

elem_t GroupSpec::unit(int i) const {
    if (i < 0 || i >= k_) throw std::invalid_argument("basis index out of range");
    return static_cast<elem_t>(pow_[i]);
}

std::vector<int> rref_mod_p(std::vector<std::vector<int>>& rows, int p) {
    std::vector<int> pivots;
    std::size_t r = 0;
    if (rows.empty()) return pivots;
    std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] % p == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        int inv = mod_inverse(rows[r][c] % p, p);
        for (auto& x : rows[r]) x = x * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] % p == 0) continue;
            int f = rows[i][c] % p;
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

LinearMap::LinearMap(GroupSpec s, std::vector<std::vector<int>> m) : spec(std::move(s)), matrix(std::move(m)) {
    if (static_cast<int>(matrix.size()) != spec.k())
        throw std::invalid_argument("LinearMap: matrix must be k x k");
    for (auto& row : matrix) {
        if (static_cast<int>(row.size()) != spec.k())
            throw std::invalid_argument("LinearMap: matrix must be k x k");
        for (auto& x : row) x = ((x % spec.p()) + spec.p()) % spec.p();
    }
}

elem_t LinearMap::apply(elem_t a) const {
    auto c = spec.coords(a);
    std::vector<int> out(spec.k(), 0);
    for (int i = 0; i < spec.k(); ++i) {
        long long s = 0;
        for (int j = 0; j < spec.k(); ++j) s += static_cast<long long>(matrix[i][j]) * c[j];
        out[i] = static_cast<int>(s % spec.p());
    }
    return spec.index(out);
}

bool is_injective(const LinearMap& f) {
    auto rows = f.matrix;
    rref_mod_p(rows, f.spec.p());
    return static_cast<int>(rows.size()) == f.spec.k();
}

LinearMap inverse(const LinearMap& f) {
    int k = f.spec.k(), p = f.spec.p();
    // Gauss-Jordan on [M | I].
    std::vector<std::vector<int>> aug(k, std::vector<int>(2 * k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) aug[i][j] = f.matrix[i][j];
        aug[i][k + i] = 1;
    }
    auto pivots = rref_mod_p(aug, p);
    if (static_cast<int>(aug.size()) != k || pivots.back() >= k)
        throw std::invalid_argument("inverse: map is not injective");
    std::vector<std::vector<int>> inv(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) inv[i][j] = aug[i][k + j];
    return LinearMap(f.spec, std::move(inv));
}

Subspace::Subspace(GroupSpec spec, std::vector<std::vector<int>> basis, std::vector<int> pivots)
    : spec_(std::move(spec)), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::from_generators(const GroupSpec& spec, const std::vector<elem_t>& gens) {
    std::vector<std::vector<int>> rows;
    rows.reserve(gens.size());
    for (elem_t g : gens) {
        if (g >= spec.order()) throw std::invalid_argument("generator outside the group");
        rows.push_back(spec.coords(g));
    }
    auto pivots = rref_mod_p(rows, spec.p());
    return Subspace(spec, std::move(rows), std::move(pivots));
}

bool Subspace::contains(elem_t a) const {
    auto c = spec_.coords(a);
    int p = spec_.p();
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        int f = c[pivots_[r]];
        if (f == 0) continue;
        for (int j = 0; j < spec_.k(); ++j)
            c[j] = ((c[j] - f * basis_[r][j]) % p + p) % p;
    }
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

std::vector<elem_t> Subspace::enumerate() const {
    std::vector<elem_t> out{0};
    for (const auto& row : basis_) {
        elem_t b = spec_.index(row);
        std::vector<elem_t> next;
        next.reserve(out.size() * spec_.p());
        for (int c = 0; c < spec_.p(); ++c) {
            elem_t cb = spec_.scale(b, c);
            for (elem_t x : out) next.push_back(spec_.add(x, cb));
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuotientMap::QuotientMap(const GroupSpec& src, Subspace kernel)
    : src_(src),
      dst_(src.p(), std::max(1, src.k() - kernel.dim())),
      kernel_(std::move(kernel)) {
    // A 0-dimensional target group is represented as Z_p^1 restricted to {0}
    // only when dim B = k; apply() then returns 0 unconditionally.
    const auto& piv = kernel_.pivots();
    for (int c = 0; c < src_.k(); ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_cols_.push_back(c);
}

elem_t QuotientMap::apply(elem_t a) const {
    if (free_cols_.empty()) return 0;
    auto c = src_.coords(a);
    int p = src_.p();
    const auto& basis = kernel_.basis();
    const auto& piv = kernel_.pivots();
    for (std::size_t r = 0; r < basis.size(); ++r) {
        int f = c[piv[r]];
        if (f == 0) continue;
        for (int j = 0; j < src_.k(); ++j)
            c[j] = ((c[j] - f * basis[r][j]) % p + p) % p;
    }
    std::vector<int> out;
    out.reserve(free_cols_.size());
    for (int col : free_cols_) out.push_back(c[col]);
    return dst_.index(out);
}

int rank_of(const GroupSpec& spec, const std::vector<elem_t>& elems) {
    std::vector<std::vector<int>> rows;
    rows.reserve(elems.size());
    for (elem_t e : elems) {
        if (e >= spec.order()) throw std::invalid_argument("element outside the group");
        rows.push_back(spec.coords(e));
    }
    rref_mod_p(rows, spec.p());
    return static_cast<int>(rows.size());
}

} // namespace zs
