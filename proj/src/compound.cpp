#include "affcount/compound.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "affcount/rm_action.hpp"

namespace affcount {

namespace {

Elem det_f2(const GFMatrix& a, std::uint32_t rows, std::uint32_t cols)
{
    // pack the selected columns of each selected row into a bitmask
    std::uint32_t packed[32];
    unsigned r = 0;
    for (unsigned i = 0; i < a.rows(); ++i) {
        if (!(rows >> i & 1)) continue;
        std::uint32_t m = 0;
        unsigned c = 0;
        for (unsigned j = 0; j < a.cols(); ++j) {
            if (!(cols >> j & 1)) continue;
            if (a.at(i, j)) m |= std::uint32_t{1} << c;
            ++c;
        }
        packed[r++] = m;
    }
    for (unsigned c = 0; c < r; ++c) {
        unsigned piv = c;
        while (piv < r && !(packed[piv] >> c & 1)) ++piv;
        if (piv == r) return 0;
        std::swap(packed[piv], packed[c]);
        for (unsigned i = c + 1; i < r; ++i)
            if (packed[i] >> c & 1) packed[i] ^= packed[c];
    }
    return 1;
}

std::vector<unsigned> bits_of(std::uint32_t mask)
{
    std::vector<unsigned> out;
    for (unsigned i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

bool blocks_equal(const GFMatrix& big, const std::vector<unsigned>& rs, const std::vector<unsigned>& cs,
                  const GFMatrix& small)
{
    if (small.rows() != rs.size() || small.cols() != cs.size()) return false;
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (big.at(rs[i], cs[j]) != small.at(static_cast<unsigned>(i), static_cast<unsigned>(j))) return false;
    return true;
}

/// Floor of x * 10^frac as a decimal string with the point inserted.
std::string decimal_floor(const ExactRatio& x, unsigned frac)
{
    ExactInt scaled = x.get_num() * ipow(10, frac);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
    std::string s = to_decimal(scaled);
    if (s.size() <= frac) s.insert(0, frac + 1 - s.size(), '0');
    if (frac > 0) s.insert(s.size() - frac, ".");
    return s;
}

} // namespace

SubsetIndex::SubsetIndex(unsigned n, unsigned r) : n_(n), r_(r)
{
    if (n > 30) throw std::invalid_argument("SubsetIndex: n must be <= 30");
    if (r > n) throw std::invalid_argument("SubsetIndex: r must be <= n");
    std::vector<unsigned> cur(r);
    for (unsigned i = 0; i < r; ++i) cur[i] = i;
    for (;;) {
        std::uint32_t m = 0;
        for (unsigned e : cur) m |= std::uint32_t{1} << e;
        subsets_.push_back(cur);
        masks_.push_back(m);
        // next combination in lexicographic order
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && cur[i] == n - r + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
}

std::size_t SubsetIndex::index_of(std::uint32_t mask) const
{
    // masks_ is not sorted numerically; a linear scan is fine at these sizes
    auto it = std::find(masks_.begin(), masks_.end(), mask);
    if (it == masks_.end()) throw std::out_of_range("SubsetIndex: subset not present");
    return static_cast<std::size_t>(it - masks_.begin());
}

Elem compound_entry(const GFMatrix& a, std::uint32_t rows, std::uint32_t cols)
{
    if (!a.is_square() || a.rows() > 32) throw std::invalid_argument("compound_entry: need square matrix, n <= 32");
    if (std::popcount(rows) != std::popcount(cols)) throw std::invalid_argument("compound_entry: subset sizes differ");
    if (rows == 0) return 1;
    if (a.field().size() == 2) return det_f2(a, rows, cols);
    return determinant(submatrix(a, bits_of(rows), bits_of(cols)));
}

GFMatrix compound_matrix(const GFMatrix& a, unsigned r)
{
    if (!a.is_square()) throw std::invalid_argument("compound_matrix: matrix not square");
    if (r > a.rows()) throw std::invalid_argument("compound_matrix: r out of range");
    const SubsetIndex idx(a.rows(), r);
    const auto N = static_cast<unsigned>(idx.size());
    GFMatrix c(N, N, a.field_ptr());
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = 0; j < N; ++j) c.set(i, j, compound_entry(a, idx.mask(i), idx.mask(j)));
    return c;
}

bool check_kronecker_embedding(const GFMatrix& a, const GFMatrix& b, unsigned k, unsigned l)
{
    const unsigned m = a.rows();
    if (k > m || l > b.rows()) throw std::invalid_argument("check_kronecker_embedding: k or l out of range");
    const GFMatrix kron = kronecker(compound_matrix(a, k), compound_matrix(b, l));
    const GFMatrix sum = direct_sum(a, b);
    const SubsetIndex sa(m, k), sb(b.rows(), l);
    std::vector<std::uint32_t> labels;
    for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = 0; j < sb.size(); ++j) labels.push_back(sa.mask(i) | (sb.mask(j) << m));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (compound_entry(sum, labels[i], labels[j]) !=
                kron.at(static_cast<unsigned>(i), static_cast<unsigned>(j)))
                return false;
    return true;
}

bool check_jordan_block_structure(unsigned n, unsigned r)
{
    if (r < 1 || r > n) throw std::invalid_argument("check_jordan_block_structure: need 1 <= r <= n");
    const FieldPtr F2 = FieldTable::get(2);
    const GFMatrix c = compound_matrix(jordan_block(n, F2), r);
    const SubsetIndex idx(n, r);
    const std::uint32_t top = std::uint32_t{1} << (n - 1);
    std::vector<unsigned> without, with;
    for (std::size_t i = 0; i < idx.size(); ++i) (idx.mask(i) & top ? with : without).push_back(static_cast<unsigned>(i));

    // lower-left: rows containing n, columns not containing n
    for (unsigned i : with)
        for (unsigned j : without)
            if (c.at(i, j) != 0) return false;

    if (n == 1) return with.size() == 1 && c.at(with[0], with[0]) == 1;
    const GFMatrix jn1 = jordan_block(n - 1, F2);
    if (!without.empty() && !blocks_equal(c, without, without, compound_matrix(jn1, r))) return false;
    // Lexicographic order on S u {n} matches that on S in C^{n-1}_{r-1}.
    return blocks_equal(c, with, with, compound_matrix(jn1, r - 1));
}

unsigned compound_jordan_defect_rank(unsigned n, unsigned r)
{
    if (r > n) return 0;
    const GFMatrix c = compound_matrix(jordan_block(n, FieldTable::get(2)), r);
    return rank(c - GFMatrix::identity(c.rows(), c.field_ptr()));
}

bool check_rank_bound(unsigned n, unsigned r)
{
    if (r < 1) throw std::invalid_argument("check_rank_bound: r must be >= 1");
    if (n == 0) throw std::invalid_argument("check_rank_bound: n must be >= 1");
    const ExactInt bound = binomial(n - 1, r);
    return ExactInt(compound_jordan_defect_rank(n, r)) >= bound;
}

ConstantEnclosure certified_constant(unsigned digits)
{
    ConstantEnclosure out;
    ExactRatio p = 1;
    const ExactRatio target(1, ipow(10, digits));
    unsigned N = 0;
    for (;;) {
        ++N;
        ExactRatio factor(ipow(2, N) - 1, ipow(2, N));
        factor.canonicalize();
        p *= factor;
        // the tail prod_{i>N} (1 - 2^{-i}) lies in [1 - 2^{-N}, 1]
        ExactRatio width = p / ExactRatio(ipow(2, N));
        width.canonicalize();
        if (width < target) break;
    }
    out.upper = p;
    ExactRatio shrink(ipow(2, N) - 1, ipow(2, N));
    shrink.canonicalize();
    out.lower = p * shrink;
    out.terms = N;
    return out;
}

std::string certified_decimal(const ExactRatio& lo, const ExactRatio& hi, unsigned digits)
{
    if (lo < 0 || hi < lo) throw std::invalid_argument("certified_decimal: need 0 <= lo <= hi");
    // choose the number of fractional digits giving `digits` significant ones
    ExactInt ip = hi.get_num() / hi.get_den();
    unsigned frac;
    if (ip > 0) {
        const auto len = static_cast<unsigned>(to_decimal(ip).size());
        frac = digits > len ? digits - len : 0;
    } else {
        unsigned zeros = 0;
        ExactRatio x = hi;
        while (x > 0 && x < ExactRatio(1, 10)) {
            x *= 10;
            ++zeros;
        }
        frac = digits + zeros;
    }
    const std::string a = decimal_floor(lo, frac), b = decimal_floor(hi, frac);
    if (a == b) return a;
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    std::string s = a.substr(0, k);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

AsymptoticReport asymptotic_report(unsigned n_max, unsigned parallelism, unsigned digits)
{
    if (n_max < 2) throw std::invalid_argument("asymptotic_report: n_max must be >= 2");
    AsymptoticReport rep;
    rep.constant = certified_constant(digits + 2);
    rep.constant_decimal = certified_decimal(rep.constant.lower, rep.constant.upper, digits);
    for (unsigned n = 2; n <= n_max; ++n) {
        AsymptoticRow row;
        row.n = n;
        row.M = coset_class_count_M(n, parallelism);
        row.exponent = (1LL << n) - static_cast<long long>(n) * n - 2LL * n - 1;
        ExactRatio scale;
        if (row.exponent >= 0) scale = ExactRatio(ExactInt(1), ipow(2, static_cast<std::uint64_t>(row.exponent)));
        else scale = ExactRatio(ipow(2, static_cast<std::uint64_t>(-row.exponent)), ExactInt(1));
        scale.canonicalize();
        row.rho_lower = ExactRatio(row.M) * rep.constant.lower * scale;
        row.rho_upper = ExactRatio(row.M) * rep.constant.upper * scale;
        row.rho = certified_decimal(row.rho_lower, row.rho_upper, digits);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace affcount
