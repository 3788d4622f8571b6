#include "affcount/rm_action.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "affcount/class_formulas.hpp"
#include "affcount/class_reps.hpp"
#include "affcount/parallel_fold.hpp"

namespace affcount {

namespace {

void normalize(std::vector<std::uint32_t>& m)
{
    std::sort(m.begin(), m.end());
    std::vector<std::uint32_t> out;
    out.reserve(m.size());
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(m[i]);
        i = j;
    }
    m = std::move(out);
}

/// Bitset truth tables over 2^n points.
using Table = std::vector<std::uint64_t>;

constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

void mobius(Table& t, unsigned n)
{
    for (unsigned i = 0; i < n && i < 6; ++i) {
        const unsigned sh = 1u << i;
        for (auto& w : t) w ^= (w & kLowHalf[i]) << sh;
    }
    for (unsigned i = 6; i < n; ++i) {
        const std::size_t stride = std::size_t{1} << (i - 6);
        for (std::size_t k = 0; k < t.size(); ++k)
            if (!(k & stride)) t[k + stride] ^= t[k];
    }
}

/// Lexicographic on sorted element lists: the set holding the lowest
/// differing element comes first.
bool lex_less(std::uint32_t a, std::uint32_t b) noexcept
{
    const std::uint32_t diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
}

void require_binary(const AffineMap& s, unsigned n)
{
    if (s.field().size() != 2) throw std::invalid_argument("rm action: map is not over F_2");
    if (s.dim() != n) throw std::invalid_argument("rm action: dimension mismatch");
}

} // namespace

AnfPoly::AnfPoly(unsigned n) : n_(n)
{
    if (n > 24) throw std::invalid_argument("AnfPoly: at most 24 variables");
}

AnfPoly::AnfPoly(unsigned n, std::vector<std::uint32_t> monomials) : n_(n), m_(std::move(monomials))
{
    if (n > 24) throw std::invalid_argument("AnfPoly: at most 24 variables");
    for (auto mask : m_)
        if (mask >> n) throw std::invalid_argument("AnfPoly: monomial uses a variable beyond n");
    normalize(m_);
}

AnfPoly AnfPoly::constant(unsigned n, bool value)
{
    return value ? AnfPoly(n, {0}) : AnfPoly(n);
}

AnfPoly AnfPoly::variable(unsigned n, unsigned i)
{
    if (i < 1 || i > n) throw std::invalid_argument("AnfPoly::variable: index out of range");
    return AnfPoly(n, {std::uint32_t{1} << (i - 1)});
}

AnfPoly AnfPoly::monomial(unsigned n, std::uint32_t mask)
{
    return AnfPoly(n, {mask});
}

AnfPoly AnfPoly::from_truth_table(unsigned n, const std::vector<bool>& tt)
{
    if (tt.size() != (std::size_t{1} << n)) throw std::invalid_argument("from_truth_table: size must be 2^n");
    std::vector<bool> c(tt);
    for (unsigned i = 0; i < n; ++i)
        for (std::size_t x = 0; x < c.size(); ++x)
            if (x >> i & 1) c[x] = c[x] != c[x ^ (std::size_t{1} << i)];
    std::vector<std::uint32_t> m;
    for (std::size_t x = 0; x < c.size(); ++x)
        if (c[x]) m.push_back(static_cast<std::uint32_t>(x));
    return AnfPoly(n, std::move(m));
}

int AnfPoly::degree() const noexcept
{
    int d = -1;
    for (auto mask : m_) d = std::max(d, std::popcount(mask));
    return d;
}

bool AnfPoly::evaluate(std::uint32_t x) const noexcept
{
    bool v = false;
    for (auto mask : m_) v ^= (x & mask) == mask;
    return v;
}

std::vector<bool> AnfPoly::truth_table() const
{
    std::vector<bool> tt(std::size_t{1} << n_);
    for (std::size_t x = 0; x < tt.size(); ++x) tt[x] = evaluate(static_cast<std::uint32_t>(x));
    return tt;
}

std::string AnfPoly::to_string() const
{
    if (m_.empty()) return "0";
    // higher degree first, then lexicographic on the variable list
    std::vector<std::uint32_t> order(m_);
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
        return lex_less(a, b);
    });
    std::string s;
    for (auto mask : order) {
        if (!s.empty()) s += '+';
        if (mask == 0) {
            s += '1';
            continue;
        }
        for (unsigned i = 0; i < n_; ++i)
            if (mask >> i & 1) s += "X" + std::to_string(i + 1);
    }
    return s;
}

AnfPoly operator+(const AnfPoly& a, const AnfPoly& b)
{
    if (a.vars() != b.vars()) throw std::invalid_argument("AnfPoly sum: variable count mismatch");
    std::vector<std::uint32_t> m(a.monomials());
    m.insert(m.end(), b.monomials().begin(), b.monomials().end());
    return AnfPoly(a.vars(), std::move(m));
}

AnfPoly operator*(const AnfPoly& a, const AnfPoly& b)
{
    if (a.vars() != b.vars()) throw std::invalid_argument("AnfPoly product: variable count mismatch");
    std::vector<std::uint32_t> m;
    m.reserve(a.monomials().size() * b.monomials().size());
    for (auto x : a.monomials())
        for (auto y : b.monomials()) m.push_back(x | y);
    return AnfPoly(a.vars(), std::move(m));
}

AnfPoly anf_substitute(const AnfPoly& f, const AffineMap& s)
{
    const unsigned n = f.vars();
    require_binary(s, n);
    std::vector<AnfPoly> image;
    image.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<std::uint32_t> m;
        for (unsigned j = 0; j < n; ++j)
            if (s.matrix().at(j, i)) m.push_back(std::uint32_t{1} << j);
        if (s.translation()[i]) m.push_back(0);
        image.emplace_back(n, std::move(m));
    }
    AnfPoly out(n);
    for (auto mask : f.monomials()) {
        AnfPoly term = AnfPoly::constant(n, true);
        for (unsigned i = 0; i < n; ++i)
            if (mask >> i & 1) term = term * image[i];
        out = out + term;
    }
    return out;
}

RMQuotientBasis::RMQuotientBasis(unsigned n, int floor, unsigned top) : n_(n), floor_(floor), top_(top)
{
    if (n > 16) throw std::invalid_argument("RMQuotientBasis: n must be <= 16");
    if (floor < -1 || top > n || floor >= static_cast<int>(top))
        throw std::invalid_argument("RMQuotientBasis: need -1 <= floor < top <= n");
    pos_.assign(std::size_t{1} << n, -1);
    for (int deg = static_cast<int>(top); deg > floor; --deg) {
        std::vector<std::uint32_t> block;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
            if (std::popcount(mask) == deg) block.push_back(mask);
        std::sort(block.begin(), block.end(), lex_less);
        for (auto mask : block) {
            pos_[mask] = static_cast<int>(masks_.size());
            masks_.push_back(mask);
        }
    }
}

std::pair<unsigned, unsigned> RMQuotientBasis::degree_block(unsigned degree) const
{
    unsigned begin = 0;
    while (begin < masks_.size() && static_cast<unsigned>(std::popcount(masks_[begin])) > degree) ++begin;
    unsigned end = begin;
    while (end < masks_.size() && static_cast<unsigned>(std::popcount(masks_[end])) == degree) ++end;
    return {begin, end};
}

BitMatrix action_rows(const AffineMap& s, const RMQuotientBasis& basis)
{
    const unsigned n = basis.n();
    require_binary(s, n);
    const std::size_t N = std::size_t{1} << n;
    const std::size_t W = (N + 63) / 64;

    std::vector<std::uint32_t> row_mask(n, 0);
    std::uint32_t shift = 0;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j)
            if (s.matrix().at(i, j)) row_mask[i] |= std::uint32_t{1} << j;
        if (s.translation()[i]) shift |= std::uint32_t{1} << i;
    }
    // coordinate truth tables of x -> xA + a
    std::vector<Table> coord(n, Table(W, 0));
    for (std::size_t x = 0; x < N; ++x) {
        std::uint32_t img = shift;
        for (unsigned i = 0; i < n; ++i)
            if (x >> i & 1) img ^= row_mask[i];
        for (unsigned i = 0; i < n; ++i)
            if (img >> i & 1) coord[i][x / 64] |= std::uint64_t{1} << (x % 64);
    }
    Table all_ones(W, ~std::uint64_t{0});
    if (N < 64) all_ones[0] = (std::uint64_t{1} << N) - 1;

    BitMatrix rows(basis.size(), basis.size());
    Table t(W);
    for (unsigned j = 0; j < basis.size(); ++j) {
        t = all_ones;
        const std::uint32_t mask = basis.mask(j);
        for (unsigned i = 0; i < n; ++i)
            if (mask >> i & 1)
                for (std::size_t w = 0; w < W; ++w) t[w] &= coord[i][w];
        mobius(t, n);
        for (std::size_t w = 0; w < W; ++w) {
            std::uint64_t bits = t[w];
            while (bits) {
                const unsigned b = static_cast<unsigned>(std::countr_zero(bits));
                bits &= bits - 1;
                const auto m = static_cast<std::uint32_t>(w * 64 + b);
                const int k = basis.index_of(m);
                if (k >= 0) {
                    rows.set(j, static_cast<unsigned>(k), true);
                } else if (std::popcount(m) > basis.floor()) {
                    throw InternalFault("action_rows: image left the quotient (degree increased)");
                }
            }
        }
    }
    return rows;
}

GFMatrix action_matrix(const AffineMap& s, const RMQuotientBasis& basis)
{
    const BitMatrix rows = action_rows(s, basis);
    GFMatrix m(basis.size(), basis.size(), FieldTable::get(2));
    for (unsigned i = 0; i < rows.rows(); ++i)
        for (unsigned j = 0; j < rows.cols(); ++j)
            if (rows.get(i, j)) m.set(j, i, 1);
    return m;
}

unsigned fix_exponent_on_quotient(const AffineMap& s, const RMQuotientBasis& basis)
{
    BitMatrix m = action_rows(s, basis);
    for (unsigned i = 0; i < m.rows(); ++i) m.flip(i, i);
    return basis.size() - rank(std::move(m));
}

ExactInt fix_on_quotient(const AffineMap& s, const RMQuotientBasis& basis)
{
    return ipow(2, fix_exponent_on_quotient(s, basis));
}

ThetaResult theta_detail(unsigned n, unsigned s, unsigned r, unsigned parallelism)
{
    if (s > r || r > n) throw std::invalid_argument("theta: need 0 <= s <= r <= n");
    ThetaResult out;
    if (n == 0) {
        out.value = 2;
        out.burnside_sum = 2;
        out.index_count = 1;
        return out;
    }
    const AglContext ctx(n, PrimePower(2));
    const RMQuotientBasis basis(n, static_cast<int>(s) - 1, r);
    const ExactInt& g = ctx.group_order();
    auto res = fold_classes(
        [&](const ClassVisitor& v) { enumerate_classes(ctx, v); },
        [&](const ClassIndex& idx) -> ExactInt {
            ExactInt size = class_multiplicity(idx) * exact_div(g, centralizer_order(ctx, idx), "class size");
            const unsigned e = fix_exponent_on_quotient(build_representative(ctx, idx), basis);
            mpz_mul_2exp(size.get_mpz_t(), size.get_mpz_t(), e);
            return size;
        },
        parallelism);
    out.burnside_sum = res.sum;
    out.index_count = res.count;
    out.value = exact_div(res.sum, g, "theta (Burnside sum not divisible by |G|)");
    return out;
}

ExactInt theta(unsigned n, unsigned s, unsigned r, unsigned parallelism)
{
    return theta_detail(n, s, r, parallelism).value;
}

ExactInt coset_class_count_M(unsigned n, unsigned parallelism)
{
    if (n < 2) throw std::invalid_argument("coset_class_count_M: n must be >= 2");
    return theta(n, 0, n - 2, parallelism);
}

} // namespace affcount
