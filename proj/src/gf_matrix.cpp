#include "affcount/gf_matrix.hpp"

#include <stdexcept>

namespace affcount {

namespace {

void require_same_field(const GFMatrix& a, const GFMatrix& b)
{
    if (a.field().size() != b.field().size()) throw std::invalid_argument("matrix field mismatch");
}

/// Row-reduces m in place; returns the rank. det_out, if given, receives
/// the determinant (square m only).
unsigned eliminate(GFMatrix& m, Elem* det_out)
{
    const FieldTable& F = m.field();
    const unsigned R = m.rows(), C = m.cols();
    std::vector<Elem> d(m.data());
    Elem det = 1;
    unsigned r = 0;
    for (unsigned c = 0; c < C && r < R; ++c) {
        unsigned piv = r;
        while (piv < R && d[piv * C + c] == 0) ++piv;
        if (piv == R) {
            det = 0;
            continue;
        }
        if (piv != r) {
            for (unsigned j = 0; j < C; ++j) std::swap(d[piv * C + j], d[r * C + j]);
            det = F.neg(det);
        }
        const Elem pv = d[r * C + c];
        det = F.mul(det, pv);
        const Elem pinv = F.inv(pv);
        for (unsigned i = r + 1; i < R; ++i) {
            const Elem f = F.mul(d[i * C + c], pinv);
            if (f == 0) continue;
            for (unsigned j = c; j < C; ++j) d[i * C + j] = F.sub(d[i * C + j], F.mul(f, d[r * C + j]));
        }
        ++r;
    }
    if (r < R || r < C) det = 0;
    if (det_out) *det_out = det;
    m = GFMatrix(R, C, m.field_ptr(), std::move(d));
    return r;
}

} // namespace

GFMatrix::GFMatrix(unsigned rows, unsigned cols, FieldPtr field)
    : rows_(rows), cols_(cols), field_(std::move(field)), data_(static_cast<std::size_t>(rows) * cols, 0)
{
    if (!field_) throw std::invalid_argument("matrix without field");
}

GFMatrix::GFMatrix(unsigned rows, unsigned cols, FieldPtr field, std::vector<Elem> data)
    : rows_(rows), cols_(cols), field_(std::move(field)), data_(std::move(data))
{
    if (!field_) throw std::invalid_argument("matrix without field");
    if (data_.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("matrix data size mismatch");
    for (Elem e : data_)
        if (e >= field_->size()) throw std::invalid_argument("matrix entry outside field");
}

GFMatrix GFMatrix::identity(unsigned n, FieldPtr field)
{
    GFMatrix m(n, n, std::move(field));
    for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

GFMatrix operator*(const GFMatrix& a, const GFMatrix& b)
{
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    const FieldTable& F = a.field();
    GFMatrix c(a.rows(), b.cols(), a.field_ptr());
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned k = 0; k < a.cols(); ++k) {
            const Elem x = a.at(i, k);
            if (x == 0) continue;
            for (unsigned j = 0; j < b.cols(); ++j) c.set(i, j, F.add(c.at(i, j), F.mul(x, b.at(k, j))));
        }
    return c;
}

GFMatrix operator+(const GFMatrix& a, const GFMatrix& b)
{
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
    std::vector<Elem> d(a.data().size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.field().add(a.data()[i], b.data()[i]);
    return GFMatrix(a.rows(), a.cols(), a.field_ptr(), std::move(d));
}

GFMatrix operator-(const GFMatrix& a, const GFMatrix& b)
{
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference shape mismatch");
    std::vector<Elem> d(a.data().size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.field().sub(a.data()[i], b.data()[i]);
    return GFMatrix(a.rows(), a.cols(), a.field_ptr(), std::move(d));
}

GFMatrix scale(const GFMatrix& a, Elem c)
{
    std::vector<Elem> d(a.data());
    for (auto& x : d) x = a.field().mul(x, c);
    return GFMatrix(a.rows(), a.cols(), a.field_ptr(), std::move(d));
}

GFMatrix transpose(const GFMatrix& a)
{
    GFMatrix t(a.cols(), a.rows(), a.field_ptr());
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned j = 0; j < a.cols(); ++j) t.set(j, i, a.at(i, j));
    return t;
}

GFMatrix matrix_power(const GFMatrix& a, std::uint64_t e)
{
    if (!a.is_square()) throw std::invalid_argument("matrix_power: not square");
    GFMatrix r = GFMatrix::identity(a.rows(), a.field_ptr());
    GFMatrix base = a;
    while (e != 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return r;
}

GFMatrix direct_sum(const GFMatrix& a, const GFMatrix& b)
{
    require_same_field(a, b);
    GFMatrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.field_ptr());
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (unsigned i = 0; i < b.rows(); ++i)
        for (unsigned j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return m;
}

GFMatrix kronecker(const GFMatrix& a, const GFMatrix& b)
{
    require_same_field(a, b);
    const FieldTable& F = a.field();
    GFMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field_ptr());
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned j = 0; j < a.cols(); ++j)
            for (unsigned k = 0; k < b.rows(); ++k)
                for (unsigned l = 0; l < b.cols(); ++l)
                    m.set(i * b.rows() + k, j * b.cols() + l, F.mul(a.at(i, j), b.at(k, l)));
    return m;
}

GFMatrix submatrix(const GFMatrix& a, const std::vector<unsigned>& rs, const std::vector<unsigned>& cs)
{
    GFMatrix m(static_cast<unsigned>(rs.size()), static_cast<unsigned>(cs.size()), a.field_ptr());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (rs[i] >= a.rows() || cs[j] >= a.cols()) throw std::out_of_range("submatrix index");
            m.set(static_cast<unsigned>(i), static_cast<unsigned>(j), a.at(rs[i], cs[j]));
        }
    return m;
}

unsigned rank(const GFMatrix& m)
{
    if (m.field().size() == 2) return rank(BitMatrix::from(m));
    GFMatrix work = m;
    return eliminate(work, nullptr);
}

unsigned nullity(const GFMatrix& m)
{
    return m.cols() - rank(m);
}

Elem determinant(const GFMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("determinant: not square");
    if (m.rows() == 0) return 1;
    GFMatrix work = m;
    Elem det = 0;
    eliminate(work, &det);
    return det;
}

bool is_invertible(const GFMatrix& m)
{
    return m.is_square() && rank(m) == m.rows();
}

GFMatrix inverse(const GFMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("inverse: not square");
    const FieldTable& F = m.field();
    const unsigned n = m.rows();
    GFMatrix aug(n, 2 * n, m.field_ptr());
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, 1);
    }
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && aug.at(piv, c) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != c)
            for (unsigned j = 0; j < 2 * n; ++j) {
                const Elem t = aug.at(piv, j);
                aug.set(piv, j, aug.at(c, j));
                aug.set(c, j, t);
            }
        const Elem pinv = F.inv(aug.at(c, c));
        for (unsigned j = 0; j < 2 * n; ++j) aug.set(c, j, F.mul(aug.at(c, j), pinv));
        for (unsigned i = 0; i < n; ++i) {
            if (i == c) continue;
            const Elem f = aug.at(i, c);
            if (f == 0) continue;
            for (unsigned j = 0; j < 2 * n; ++j) aug.set(i, j, F.sub(aug.at(i, j), F.mul(f, aug.at(c, j))));
        }
    }
    GFMatrix inv(n, n, m.field_ptr());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
    return inv;
}

GFMatrix evaluate_poly(const Poly& f, const GFMatrix& a)
{
    if (!a.is_square()) throw std::invalid_argument("evaluate_poly: not square");
    GFMatrix acc(a.rows(), a.cols(), a.field_ptr());
    const GFMatrix I = GFMatrix::identity(a.rows(), a.field_ptr());
    // Horner
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * a + scale(I, f.coeffs()[i]);
    return acc;
}

GFMatrix companion_matrix(const FieldPtr& field, const Poly& f)
{
    if (f.degree() < 1) throw std::invalid_argument("companion_matrix: degree must be >= 1");
    if (!f.is_monic()) throw std::invalid_argument("companion_matrix: polynomial must be monic");
    const unsigned k = static_cast<unsigned>(f.degree());
    GFMatrix m(k, k, field);
    for (unsigned i = 0; i + 1 < k; ++i) m.set(i, i + 1, 1);
    for (unsigned j = 0; j < k; ++j) m.set(k - 1, j, field->neg(f.coeff(j)));
    return m;
}

GFMatrix jordan_block(unsigned m, const FieldPtr& field)
{
    if (m == 0) throw std::invalid_argument("jordan_block: size must be >= 1");
    GFMatrix j = GFMatrix::identity(m, field);
    for (unsigned i = 0; i + 1 < m; ++i) j.set(i, i + 1, 1);
    return j;
}

AffineMap::AffineMap(GFMatrix A, std::vector<Elem> a) : A_(std::move(A)), a_(std::move(a))
{
    if (!A_.is_square()) throw std::invalid_argument("affine map: matrix not square");
    if (a_.size() != A_.rows()) throw std::invalid_argument("affine map: translation length mismatch");
    for (Elem e : a_)
        if (e >= A_.field().size()) throw std::invalid_argument("affine map: translation entry outside field");
    if (!is_invertible(A_)) throw std::invalid_argument("affine map: matrix not invertible");
}

AffineMap AffineMap::trusted(GFMatrix A, std::vector<Elem> a)
{
    AffineMap m;
    m.A_ = std::move(A);
    m.a_ = std::move(a);
    return m;
}

AffineMap AffineMap::identity(unsigned n, const FieldPtr& field)
{
    return trusted(GFMatrix::identity(n, field), std::vector<Elem>(n, 0));
}

AffineMap AffineMap::linear(GFMatrix A)
{
    const unsigned n = A.rows();
    return AffineMap(std::move(A), std::vector<Elem>(n, 0));
}

AffineMap AffineMap::translation(std::vector<Elem> a, const FieldPtr& field)
{
    const unsigned n = static_cast<unsigned>(a.size());
    return AffineMap(GFMatrix::identity(n, field), std::move(a));
}

std::vector<Elem> AffineMap::apply(const std::vector<Elem>& x) const
{
    if (x.size() != dim()) throw std::invalid_argument("affine map: point dimension mismatch");
    const FieldTable& F = field();
    std::vector<Elem> y(a_);
    for (unsigned i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        const Elem* r = A_.row(i);
        for (unsigned j = 0; j < dim(); ++j) y[j] = F.add(y[j], F.mul(x[i], r[j]));
    }
    return y;
}

std::uint64_t AffineMap::apply_index(std::uint64_t x) const
{
    const unsigned q = field().size();
    return index_from_point(apply(point_from_index(x, dim(), q)), q);
}

bool AffineMap::is_identity() const noexcept
{
    for (Elem e : a_)
        if (e != 0) return false;
    for (unsigned i = 0; i < dim(); ++i)
        for (unsigned j = 0; j < dim(); ++j)
            if (A_.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

AffineMap compose(const AffineMap& s, const AffineMap& t)
{
    if (s.dim() != t.dim()) throw std::invalid_argument("compose: dimension mismatch");
    // s(t(x)) = (x A_t + a_t) A_s + a_s
    return AffineMap::trusted(t.matrix() * s.matrix(), s.apply(t.translation()));
}

AffineMap power(const AffineMap& s, std::uint64_t k)
{
    AffineMap r = AffineMap::identity(s.dim(), s.field_ptr());
    AffineMap base = s;
    while (k != 0) {
        if (k & 1) r = compose(base, r);
        k >>= 1;
        if (k != 0) base = compose(base, base);
    }
    return r;
}

AffineMap inverse(const AffineMap& s)
{
    // x = (y - a) A^{-1}
    GFMatrix Ai = inverse(s.matrix());
    std::vector<Elem> neg(s.translation());
    for (auto& e : neg) e = s.field().neg(e);
    AffineMap lin = AffineMap::trusted(Ai, std::vector<Elem>(s.dim(), 0));
    return AffineMap::trusted(std::move(Ai), lin.apply(neg));
}

AffineMap boxplus(const AffineMap& a, const AffineMap& b)
{
    if (a.field().size() != b.field().size()) throw std::invalid_argument("boxplus: field mismatch");
    std::vector<Elem> t(a.translation());
    t.insert(t.end(), b.translation().begin(), b.translation().end());
    return AffineMap::trusted(direct_sum(a.matrix(), b.matrix()), std::move(t));
}

std::vector<Elem> point_from_index(std::uint64_t idx, unsigned n, unsigned q)
{
    std::vector<Elem> x(n);
    for (unsigned i = 0; i < n; ++i) {
        x[i] = static_cast<Elem>(idx % q);
        idx /= q;
    }
    return x;
}

std::uint64_t index_from_point(const std::vector<Elem>& x, unsigned q)
{
    std::uint64_t v = 0;
    for (std::size_t i = x.size(); i-- > 0;) v = v * q + x[i];
    return v;
}

ExactInt affine_order(const AffineMap& s)
{
    const ExactInt bound = agl_group_order(s.dim(), PrimePower(s.field().size()));
    AffineMap cur = s;
    ExactInt k = 1;
    while (!cur.is_identity()) {
        if (k > bound) throw InternalFault("affine_order: exceeded |AGL| without returning to identity");
        cur = compose(s, cur);
        ++k;
    }
    return k;
}

ExactInt fixed_point_count(const AffineMap& s)
{
    const FieldTable& F = s.field();
    const unsigned n = s.dim();
    // x (A - I) = -a is solvable iff -a lies in the row space of A - I.
    GFMatrix B = s.matrix() - GFMatrix::identity(n, s.field_ptr());
    GFMatrix aug(n + 1, n, s.field_ptr());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) aug.set(i, j, B.at(i, j));
    for (unsigned j = 0; j < n; ++j) aug.set(n, j, F.neg(s.translation()[j]));
    const unsigned rb = rank(B);
    if (rank(aug) != rb) return 0;
    return ipow(F.size(), n - rb);
}

ExactInt cyclic_orbit_count_by_cycles(const AffineMap& s)
{
    const unsigned q = s.field().size();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < s.dim(); ++i) {
        total *= q;
        if (total > (std::uint64_t{1} << 24)) throw std::invalid_argument("cyclic_orbit_count_by_cycles: q^n > 2^24");
    }
    std::vector<bool> seen(total, false);
    ExactInt orbits = 0;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (seen[start]) continue;
        ++orbits;
        std::uint64_t x = start;
        while (!seen[x]) {
            seen[x] = true;
            x = s.apply_index(x);
        }
    }
    return orbits;
}

ExactInt cyclic_orbit_count_by_divisors(const AffineMap& s)
{
    const ExactInt o = affine_order(s);
    if (!o.fits_ulong_p()) throw std::invalid_argument("cyclic_orbit_count_by_divisors: order too large");
    const std::uint64_t ov = o.get_ui();
    ExactInt sum = 0;
    for (std::uint64_t k : divisors(factorize(ov)))
        sum += ExactInt(static_cast<unsigned long>(euler_phi(ov / k))) * fixed_point_count(power(s, k));
    return exact_div(sum, o, "cyclic_orbit_count_by_divisors");
}

ExactInt cyclic_orbit_count(const AffineMap& s)
{
    const unsigned q = s.field().size();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < s.dim(); ++i) {
        total *= q;
        if (total > (std::uint64_t{1} << 24)) return cyclic_orbit_count_by_divisors(s);
    }
    return cyclic_orbit_count_by_cycles(s);
}

BitMatrix::BitMatrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(static_cast<std::size_t>(rows) * wpr_, 0)
{
}

BitMatrix BitMatrix::identity(unsigned n)
{
    BitMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from(const GFMatrix& m)
{
    if (m.field().size() != 2) throw std::invalid_argument("BitMatrix: field is not F_2");
    BitMatrix b(m.rows(), m.cols());
    for (unsigned i = 0; i < m.rows(); ++i)
        for (unsigned j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) b.set(i, j, true);
    return b;
}

GFMatrix BitMatrix::to_gf(const FieldPtr& f2) const
{
    GFMatrix m(rows_, cols_, f2);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if (get(i, j)) m.set(i, j, 1);
    return m;
}

unsigned rank(BitMatrix m)
{
    const unsigned R = m.rows(), C = m.cols(), W = m.words_per_row();
    unsigned r = 0;
    for (unsigned c = 0; c < C && r < R; ++c) {
        const unsigned wi = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        unsigned piv = r;
        while (piv < R && !(m.row(piv)[wi] & bit)) ++piv;
        if (piv == R) continue;
        if (piv != r) {
            std::uint64_t* a = m.row(piv);
            std::uint64_t* b = m.row(r);
            for (unsigned k = 0; k < W; ++k) std::swap(a[k], b[k]);
        }
        const std::uint64_t* pr = m.row(r);
        for (unsigned i = r + 1; i < R; ++i) {
            std::uint64_t* ri = m.row(i);
            if (!(ri[wi] & bit)) continue;
            for (unsigned k = wi; k < W; ++k) ri[k] ^= pr[k];
        }
        ++r;
    }
    return r;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("BitMatrix product shape mismatch");
    BitMatrix c(a.rows(), b.cols());
    const unsigned W = b.words_per_row();
    for (unsigned i = 0; i < a.rows(); ++i) {
        std::uint64_t* ci = c.row(i);
        for (unsigned k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            const std::uint64_t* bk = b.row(k);
            for (unsigned w = 0; w < W; ++w) ci[w] ^= bk[w];
        }
    }
    return c;
}

} // namespace affcount
