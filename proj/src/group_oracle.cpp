#include "affcount/group_oracle.hpp"

#include <numeric>
#include <stdexcept>

#include "affcount/rm_action.hpp"

namespace affcount {

namespace {

std::uint64_t point_count(unsigned n, std::uint64_t q)
{
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        total *= q;
        if (total > oracle_limits::kPoints) throw std::invalid_argument("oracle: q^n exceeds 2^16");
    }
    return total;
}

void require_group_at_most(unsigned n, const PrimePower& q, std::uint64_t limit)
{
    if (n == 0) throw std::invalid_argument("oracle: n must be >= 1");
    if (agl_group_order(n, q) > limit) throw std::invalid_argument("oracle: |AGL(n,q)| exceeds the size guard");
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
        components_ = n;
    }
    std::uint32_t find(std::uint32_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent_[a] = b;
        --components_;
    }
    std::size_t components() const noexcept { return components_; }

private:
    std::vector<std::uint32_t> parent_;
    std::size_t components_;
};

std::uint64_t cycle_count(const std::vector<std::uint32_t>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::uint64_t cycles = 0;
    for (std::uint32_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::uint32_t x = s; !seen[x]; x = perm[x]) seen[x] = true;
    }
    return cycles;
}

/// Point index addition in F_q^n.
class PointAdder {
public:
    PointAdder(unsigned n, const FieldTable& F) : n_(n), F_(F) {}
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const
    {
        const unsigned q = F_.size();
        if (q == 2) return x ^ y;
        std::uint32_t out = 0, w = 1;
        for (unsigned i = 0; i < n_; ++i) {
            out += w * F_.add(static_cast<Elem>(x % q), static_cast<Elem>(y % q));
            x /= q;
            y /= q;
            w *= q;
        }
        return out;
    }

private:
    unsigned n_;
    const FieldTable& F_;
};

} // namespace

std::vector<std::uint32_t> point_permutation(const AffineMap& s)
{
    const unsigned q = s.field().size();
    const std::uint64_t total = point_count(s.dim(), q);
    std::vector<std::uint32_t> perm(total);
    for (std::uint64_t x = 0; x < total; ++x) perm[x] = static_cast<std::uint32_t>(s.apply_index(x));
    return perm;
}

void for_each_group_element(unsigned n, const PrimePower& q, const std::function<void(const AffineMap&)>& visit)
{
    require_group_at_most(n, q, oracle_limits::kStreamedGroup);
    const FieldPtr F = FieldTable::get(q.q());
    const unsigned qq = F->size();
    const std::uint64_t points = point_count(n, qq);
    std::uint64_t matrices = 1;
    for (unsigned i = 0; i < n * n; ++i) matrices *= qq;
    for (std::uint64_t code = 0; code < matrices; ++code) {
        std::vector<Elem> d(n * n);
        std::uint64_t c = code;
        for (auto& e : d) {
            e = static_cast<Elem>(c % qq);
            c /= qq;
        }
        GFMatrix A(n, n, F, std::move(d));
        if (!is_invertible(A)) continue;
        for (std::uint64_t t = 0; t < points; ++t) visit(AffineMap::trusted(A, point_from_index(t, n, qq)));
    }
}

std::vector<AffineMap> agl_generators(unsigned n, const PrimePower& q)
{
    const FieldPtr F = FieldTable::get(q.q());
    const Elem w = F->primitive_element();
    std::vector<AffineMap> gens;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            for (Elem c : {Elem{1}, w}) {
                GFMatrix A = GFMatrix::identity(n, F);
                A.set(i, j, c);
                gens.push_back(AffineMap::linear(std::move(A)));
                if (w == 1) break;
            }
        }
    if (w != 1) {
        GFMatrix D = GFMatrix::identity(n, F);
        D.set(0, 0, w);
        gens.push_back(AffineMap::linear(std::move(D)));
    }
    std::vector<Elem> e1(n, 0);
    e1[0] = 1;
    gens.push_back(AffineMap::translation(std::move(e1), F));
    return gens;
}

std::size_t GroupElementTable::PermHash::operator()(const std::vector<std::uint32_t>& v) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
}

GroupElementTable::GroupElementTable(unsigned n, const PrimePower& q) : n_(n), q_(q)
{
    require_group_at_most(n, q, oracle_limits::kTableGroup);
    for_each_group_element(n, q, [&](const AffineMap& s) {
        perms_.push_back(point_permutation(s));
        index_.emplace(perms_.back(), maps_.size());
        maps_.push_back(s);
    });
    if (ExactInt(static_cast<unsigned long>(maps_.size())) != agl_group_order(n, q) || index_.size() != maps_.size())
        throw InternalFault("GroupElementTable: element count differs from |AGL|");
}

std::optional<std::size_t> GroupElementTable::find(const std::vector<std::uint32_t>& perm) const
{
    auto it = index_.find(perm);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GroupElementTable::compose(std::size_t i, std::size_t j) const
{
    const auto& a = perms_.at(i);
    const auto& b = perms_.at(j);
    std::vector<std::uint32_t> c(a.size());
    for (std::size_t x = 0; x < c.size(); ++x) c[x] = a[b[x]];
    auto k = find(c);
    if (!k) throw InternalFault("GroupElementTable: not closed under composition");
    return *k;
}

std::size_t GroupElementTable::inverse(std::size_t i) const
{
    const auto& a = perms_.at(i);
    std::vector<std::uint32_t> c(a.size());
    for (std::size_t x = 0; x < c.size(); ++x) c[a[x]] = static_cast<std::uint32_t>(x);
    auto k = find(c);
    if (!k) throw InternalFault("GroupElementTable: not closed under inverse");
    return *k;
}

ExactInt burnside_full(unsigned n, const PrimePower& q)
{
    require_group_at_most(n, q, oracle_limits::kStreamedGroup);
    const FieldPtr F = FieldTable::get(q.q());
    const std::uint64_t points = point_count(n, q.q());
    const PointAdder adder(n, *F);
    // Fix(g) = q^{cycles}; collect counts per cycle number, then sum.
    std::vector<std::uint64_t> by_cycles(points + 1, 0);
    std::vector<std::uint32_t> lin(points), perm(points);
    for_each_group_element(n, q, [&](const AffineMap& s) {
        // translations of one matrix arrive consecutively, zero first
        bool zero_translation = true;
        for (Elem e : s.translation()) zero_translation = zero_translation && e == 0;
        if (zero_translation) lin = point_permutation(s);
        const auto t = static_cast<std::uint32_t>(index_from_point(s.translation(), F->size()));
        for (std::uint64_t x = 0; x < points; ++x) perm[x] = adder.add(lin[x], t);
        ++by_cycles[cycle_count(perm)];
    });
    ExactInt sum = 0;
    for (std::uint64_t c = 0; c <= points; ++c)
        if (by_cycles[c]) sum += ExactInt(static_cast<unsigned long>(by_cycles[c])) * ipow(q.q(), c);
    return exact_div(sum, agl_group_order(n, q), "burnside_full");
}

ExactInt orbit_enumeration(unsigned n, const PrimePower& q)
{
    if (n == 0) return static_cast<unsigned long>(q.q());
    const unsigned qq = static_cast<unsigned>(q.q());
    const std::uint64_t points = point_count(n, qq);
    std::uint64_t functions = 1;
    for (std::uint64_t i = 0; i < points; ++i) {
        functions *= qq;
        if (functions > oracle_limits::kFunctionSpace)
            throw std::invalid_argument("orbit_enumeration: function space exceeds 2^20");
    }
    std::vector<std::uint64_t> weight(points);
    weight[0] = 1;
    for (std::uint64_t x = 1; x < points; ++x) weight[x] = weight[x - 1] * qq;

    UnionFind uf(functions);
    std::vector<Elem> digits(points);
    for (const auto& g : agl_generators(n, q)) {
        const auto perm = point_permutation(g);
        for (std::uint64_t f = 0; f < functions; ++f) {
            std::uint64_t v = f;
            for (std::uint64_t x = 0; x < points; ++x) {
                digits[x] = static_cast<Elem>(v % qq);
                v /= qq;
            }
            // (f o g)(x) = f(g(x))
            std::uint64_t h = 0;
            for (std::uint64_t x = 0; x < points; ++x) h += weight[x] * digits[perm[x]];
            uf.unite(static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(h));
        }
    }
    return static_cast<unsigned long>(uf.components());
}

ExactInt brute_centralizer(const GroupElementTable& table, const AffineMap& s)
{
    const auto sp = point_permutation(s);
    if (sp.size() != table.perm(0).size()) throw std::invalid_argument("brute_centralizer: dimension mismatch");
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& g = table.perm(i);
        bool commutes = true;
        for (std::size_t x = 0; x < sp.size() && commutes; ++x) commutes = g[sp[x]] == sp[g[x]];
        if (commutes) ++count;
    }
    return static_cast<unsigned long>(count);
}

std::uint64_t brute_conjugacy_classes(const GroupElementTable& table)
{
    std::vector<std::size_t> gens, gens_inv;
    for (const auto& g : agl_generators(table.n(), table.field())) {
        auto k = table.find(g);
        if (!k) throw InternalFault("brute_conjugacy_classes: generator missing from table");
        gens.push_back(*k);
        gens_inv.push_back(table.inverse(*k));
    }
    UnionFind uf(table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k)
            uf.unite(static_cast<std::uint32_t>(i),
                     static_cast<std::uint32_t>(table.compose(gens[k], table.compose(i, gens_inv[k]))));
    return uf.components();
}

ExactInt burnside_full_quotient(unsigned n, unsigned s, unsigned r)
{
    if (s > r || r > n) throw std::invalid_argument("burnside_full_quotient: need 0 <= s <= r <= n");
    const PrimePower two(2);
    require_group_at_most(n, two, oracle_limits::kStreamedGroup);
    const RMQuotientBasis basis(n, static_cast<int>(s) - 1, r);
    std::vector<std::uint64_t> by_exp(basis.size() + 1, 0);
    for_each_group_element(n, two, [&](const AffineMap& g) { ++by_exp[fix_exponent_on_quotient(g, basis)]; });
    ExactInt sum = 0;
    for (std::size_t e = 0; e < by_exp.size(); ++e)
        if (by_exp[e]) sum += ExactInt(static_cast<unsigned long>(by_exp[e])) * ipow(2, e);
    return exact_div(sum, agl_group_order(n, two), "burnside_full_quotient");
}

ExactInt orbit_enumeration_quotient(unsigned n, unsigned s, unsigned r)
{
    if (s > r || r > n) throw std::invalid_argument("orbit_enumeration_quotient: need 0 <= s <= r <= n");
    if (n == 0) return 2;
    const RMQuotientBasis basis(n, static_cast<int>(s) - 1, r);
    if (basis.size() > 20) throw std::invalid_argument("orbit_enumeration_quotient: quotient dimension exceeds 20");
    const std::uint32_t total = std::uint32_t{1} << basis.size();
    UnionFind uf(total);
    for (const auto& g : agl_generators(n, PrimePower(2))) {
        const BitMatrix rows = action_rows(g, basis);
        std::vector<std::uint32_t> image(basis.size());
        for (unsigned j = 0; j < basis.size(); ++j)
            for (unsigned k = 0; k < basis.size(); ++k)
                if (rows.get(j, k)) image[j] |= std::uint32_t{1} << k;
        for (std::uint32_t v = 0; v < total; ++v) {
            std::uint32_t w = 0;
            for (unsigned j = 0; j < basis.size(); ++j)
                if (v >> j & 1) w ^= image[j];
            uf.unite(v, w);
        }
    }
    return static_cast<unsigned long>(uf.components());
}

} // namespace affcount
