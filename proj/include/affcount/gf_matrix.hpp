#pragma once

#include <cstdint>
#include <vector>

#include "affcount/exact_arith.hpp"
#include "affcount/gf_field.hpp"

namespace affcount {

/// Dense row-major matrix over F_q.
class GFMatrix {
public:
    GFMatrix() = default;
    /// Zero matrix.
    GFMatrix(unsigned rows, unsigned cols, FieldPtr field);
    /// Throws std::invalid_argument if data.size() != rows*cols or an entry
    /// is not a field element.
    GFMatrix(unsigned rows, unsigned cols, FieldPtr field, std::vector<Elem> data);

    static GFMatrix identity(unsigned n, FieldPtr field);

    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const FieldTable& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    Elem at(unsigned i, unsigned j) const noexcept { return data_[i * cols_ + j]; }
    void set(unsigned i, unsigned j, Elem v) noexcept { data_[i * cols_ + j] = v; }
    const std::vector<Elem>& data() const noexcept { return data_; }
    const Elem* row(unsigned i) const noexcept { return data_.data() + i * cols_; }

    friend bool operator==(const GFMatrix& a, const GFMatrix& b) noexcept
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
               a.field_->size() == b.field_->size();
    }

private:
    unsigned rows_ = 0, cols_ = 0;
    FieldPtr field_;
    std::vector<Elem> data_;
};

/// Throw std::invalid_argument on shape or field mismatch.
GFMatrix operator*(const GFMatrix& a, const GFMatrix& b);
GFMatrix operator+(const GFMatrix& a, const GFMatrix& b);
GFMatrix operator-(const GFMatrix& a, const GFMatrix& b);
GFMatrix scale(const GFMatrix& a, Elem c);
GFMatrix transpose(const GFMatrix& a);
GFMatrix matrix_power(const GFMatrix& a, std::uint64_t e);
/// Block diagonal [a 0; 0 b].
GFMatrix direct_sum(const GFMatrix& a, const GFMatrix& b);
/// Kronecker product.
GFMatrix kronecker(const GFMatrix& a, const GFMatrix& b);
/// Rows `rs` and columns `cs` of a, in the given order.
GFMatrix submatrix(const GFMatrix& a, const std::vector<unsigned>& rs,
                   const std::vector<unsigned>& cs);

/// Gaussian elimination; pivots on the first nonzero entry scanning down.
/// Over F_2 the rows are bit-packed.
unsigned rank(const GFMatrix& m);
unsigned nullity(const GFMatrix& m);
Elem determinant(const GFMatrix& m);
bool is_invertible(const GFMatrix& m);
/// Throws std::domain_error if singular.
GFMatrix inverse(const GFMatrix& m);

/// f(A) for square A.
GFMatrix evaluate_poly(const Poly& f, const GFMatrix& a);

/// Companion form of monic f: ones on the superdiagonal, last row
/// (-a_0, ..., -a_{k-1}). Throws std::invalid_argument if f is not monic or
/// has degree < 1.
GFMatrix companion_matrix(const FieldPtr& field, const Poly& f);

/// J_m = I + N_m: ones on the diagonal and superdiagonal.
GFMatrix jordan_block(unsigned m, const FieldPtr& field);

/// x -> xA + a on row vectors of F_q^n.
class AffineMap {
public:
    /// Throws std::invalid_argument if A is not square and invertible or a
    /// has the wrong length.
    AffineMap(GFMatrix A, std::vector<Elem> a);
    /// Skips the invertibility check (caller guarantees it).
    static AffineMap trusted(GFMatrix A, std::vector<Elem> a);

    static AffineMap identity(unsigned n, const FieldPtr& field);
    static AffineMap linear(GFMatrix A);
    static AffineMap translation(std::vector<Elem> a, const FieldPtr& field);

    unsigned dim() const noexcept { return A_.rows(); }
    const GFMatrix& matrix() const noexcept { return A_; }
    const std::vector<Elem>& translation() const noexcept { return a_; }
    const FieldTable& field() const noexcept { return A_.field(); }
    const FieldPtr& field_ptr() const noexcept { return A_.field_ptr(); }

    std::vector<Elem> apply(const std::vector<Elem>& x) const;
    /// Point index sum x_i q^i.
    std::uint64_t apply_index(std::uint64_t x) const;
    bool is_identity() const noexcept;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;

private:
    AffineMap() = default;
    GFMatrix A_;
    std::vector<Elem> a_;
};

/// (s o t)(x) = s(t(x)).
AffineMap compose(const AffineMap& s, const AffineMap& t);
AffineMap power(const AffineMap& s, std::uint64_t k);
AffineMap inverse(const AffineMap& s);
/// Block map acting as a on the first n1 coordinates and b on the rest.
/// Throws std::invalid_argument on field mismatch.
AffineMap boxplus(const AffineMap& a, const AffineMap& b);

std::vector<Elem> point_from_index(std::uint64_t idx, unsigned n, unsigned q);
std::uint64_t index_from_point(const std::vector<Elem>& x, unsigned q);

/// Least k >= 1 with s^k = id. Repeated composition bounded by |AGL(n,q)|.
ExactInt affine_order(const AffineMap& s);

/// |{x : xA + a = x}|: q^{nullity(A - I)} if x(A - I) = -a is solvable, else 0.
ExactInt fixed_point_count(const AffineMap& s);

/// Number of <s>-orbits on F_q^n. Cycle traversal when q^n <= 2^24,
/// otherwise the divisor sum (1/o) sum_{k | o} phi(o/k) fix(s^k).
ExactInt cyclic_orbit_count(const AffineMap& s);
/// Throws std::invalid_argument if q^n > 2^24.
ExactInt cyclic_orbit_count_by_cycles(const AffineMap& s);
ExactInt cyclic_orbit_count_by_divisors(const AffineMap& s);

/// Matrix over F_2 with rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(unsigned rows, unsigned cols);

    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return cols_; }
    unsigned words_per_row() const noexcept { return wpr_; }

    bool get(unsigned i, unsigned j) const noexcept
    {
        return (w_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(unsigned i, unsigned j, bool v) noexcept
    {
        auto& w = w_[i * wpr_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        w = v ? (w | bit) : (w & ~bit);
    }
    void flip(unsigned i, unsigned j) noexcept { w_[i * wpr_ + j / 64] ^= std::uint64_t{1} << (j % 64); }
    std::uint64_t* row(unsigned i) noexcept { return w_.data() + i * wpr_; }
    const std::uint64_t* row(unsigned i) const noexcept { return w_.data() + i * wpr_; }

    static BitMatrix identity(unsigned n);
    static BitMatrix from(const GFMatrix& m);
    GFMatrix to_gf(const FieldPtr& f2) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    unsigned rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

unsigned rank(BitMatrix m);
BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

} // namespace affcount
