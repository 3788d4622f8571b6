#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affcount/exact_arith.hpp"
#include "affcount/gf_matrix.hpp"
#include "affcount/partition.hpp"

namespace affcount {

/// Boolean polynomial in X_1..X_n, n <= 24. A monomial X_S is the bitmask
/// with bit i-1 set for each i in S; monomials are kept sorted and unique.
class AnfPoly {
public:
    explicit AnfPoly(unsigned n = 0);
    /// Repeated monomials cancel in pairs.
    AnfPoly(unsigned n, std::vector<std::uint32_t> monomials);

    static AnfPoly constant(unsigned n, bool value);
    /// X_i, 1 <= i <= n.
    static AnfPoly variable(unsigned n, unsigned i);
    static AnfPoly monomial(unsigned n, std::uint32_t mask);
    /// ANF of the function with truth table tt (entry x = f(x), x a bitmask
    /// with bit i-1 holding x_i).
    static AnfPoly from_truth_table(unsigned n, const std::vector<bool>& tt);

    unsigned vars() const noexcept { return n_; }
    const std::vector<std::uint32_t>& monomials() const noexcept { return m_; }
    bool is_zero() const noexcept { return m_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept;
    bool evaluate(std::uint32_t x) const noexcept;
    std::vector<bool> truth_table() const;

    /// "X1X2+X2+1"; "0" for zero.
    std::string to_string() const;

    friend bool operator==(const AnfPoly&, const AnfPoly&) = default;

private:
    unsigned n_;
    std::vector<std::uint32_t> m_;
};

AnfPoly operator+(const AnfPoly& a, const AnfPoly& b);
AnfPoly operator*(const AnfPoly& a, const AnfPoly& b);

/// f((X_1..X_n) A + a): X_i becomes sum_j A[j][i] X_j + a_i, expanded and
/// reduced with X_i^2 = X_i. Throws std::invalid_argument unless s is over
/// F_2 with dim == f.vars().
AnfPoly anf_substitute(const AnfPoly& f, const AffineMap& s);

/// Basis {X_S : floor < |S| <= top} of R(top,n)/R(floor,n), degree
/// descending, subsets lexicographic (on sorted elements) within a degree.
class RMQuotientBasis {
public:
    /// -1 <= floor < top <= n, n <= 16.
    RMQuotientBasis(unsigned n, int floor, unsigned top);

    unsigned n() const noexcept { return n_; }
    int floor() const noexcept { return floor_; }
    unsigned top() const noexcept { return top_; }
    unsigned size() const noexcept { return static_cast<unsigned>(masks_.size()); }
    std::uint32_t mask(unsigned i) const noexcept { return masks_[i]; }
    const std::vector<std::uint32_t>& masks() const noexcept { return masks_; }
    /// Position of X_S, or -1 if S is not in the basis.
    int index_of(std::uint32_t mask) const noexcept { return pos_[mask]; }
    /// [begin, end) of the block of monomials of the given degree.
    std::pair<unsigned, unsigned> degree_block(unsigned degree) const;

private:
    unsigned n_;
    int floor_;
    unsigned top_;
    std::vector<std::uint32_t> masks_;
    std::vector<int> pos_;
};

/// Matrix of f -> f o s on the quotient: column j holds the coordinates of
/// the image of basis monomial j, dropping monomials of degree <= floor.
/// With this convention action_matrix(s o t) = action_matrix(t) *
/// action_matrix(s).
GFMatrix action_matrix(const AffineMap& s, const RMQuotientBasis& basis);

/// Same matrix, transposed and bit-packed: row j is the image of basis j.
BitMatrix action_rows(const AffineMap& s, const RMQuotientBasis& basis);

/// Exponent of 2 in the number of fixed cosets: nullity(action - I).
unsigned fix_exponent_on_quotient(const AffineMap& s, const RMQuotientBasis& basis);

/// 2^{nullity(action_matrix - I)}.
ExactInt fix_on_quotient(const AffineMap& s, const RMQuotientBasis& basis);

struct ThetaResult {
    ExactInt value;
    ExactInt burnside_sum;
    std::uint64_t index_count = 0;
};

/// Orbits of AGL(n, F_2) on R(r,n)/R(s-1,n), 0 <= s <= r <= n, as a
/// Burnside sum over conjugacy classes. Throws std::invalid_argument on a
/// bad range and InternalFault if |G| does not divide the sum.
ThetaResult theta_detail(unsigned n, unsigned s, unsigned r, unsigned parallelism = 1);
ExactInt theta(unsigned n, unsigned s, unsigned r, unsigned parallelism = 1);

/// theta(n; 0, n-2): orbits on R(n-2, n); n >= 2.
ExactInt coset_class_count_M(unsigned n, unsigned parallelism = 1);

} // namespace affcount
