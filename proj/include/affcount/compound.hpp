#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affcount/exact_arith.hpp"
#include "affcount/gf_matrix.hpp"

namespace affcount {

/// The r-subsets of {1..n} in lexicographic order of their sorted elements.
class SubsetIndex {
public:
    /// r <= n <= 30.
    SubsetIndex(unsigned n, unsigned r);

    unsigned n() const noexcept { return n_; }
    unsigned r() const noexcept { return r_; }
    std::size_t size() const noexcept { return subsets_.size(); }
    /// 0-based element indices, ascending.
    const std::vector<unsigned>& subset(std::size_t i) const noexcept { return subsets_[i]; }
    std::uint32_t mask(std::size_t i) const noexcept { return masks_[i]; }
    /// Position of the subset with this bitmask (bit i = element i+1);
    /// throws std::out_of_range if absent.
    std::size_t index_of(std::uint32_t mask) const;

private:
    unsigned n_, r_;
    std::vector<std::vector<unsigned>> subsets_;
    std::vector<std::uint32_t> masks_;
};

/// C_r(A): entry (S, T) = det A(S, T); C_0(A) = [1]. Throws
/// std::invalid_argument unless A is square and r <= n.
GFMatrix compound_matrix(const GFMatrix& a, unsigned r);

/// det A(S, T) for row/column subsets given as bitmasks of equal size.
Elem compound_entry(const GFMatrix& a, std::uint32_t rows, std::uint32_t cols);

/// True iff the principal submatrix of C_{k+l}(A (+) B) on the sets
/// S u (T + m), listed in Kronecker order, equals C_k(A) (x) C_l(B).
bool check_kronecker_embedding(const GFMatrix& a, const GFMatrix& b, unsigned k, unsigned l);

/// True iff C_r(J_n) over F_2, with rows and columns regrouped as (subsets
/// without n | subsets with n), is [C_r(J_{n-1}) *; 0 C_{r-1}(J_{n-1})]
/// with the second block indexed by S u {n}. 1 <= r <= n.
bool check_jordan_block_structure(unsigned n, unsigned r);

/// rank(C_r(J_n) - I) over F_2.
unsigned compound_jordan_defect_rank(unsigned n, unsigned r);

/// rank(C_r(J_n) - I) >= C(n-1, r) over F_2; r >= 1. For r > n the compound
/// is empty and the bound reads 0 >= 0.
bool check_rank_bound(unsigned n, unsigned r);

/// prod_{i>=1} (1 - 2^{-i}) enclosed by rationals: lower = P_N * (1 - 2^{-N}),
/// upper = P_N where P_N is the partial product through N.
struct ConstantEnclosure {
    ExactRatio lower;
    ExactRatio upper;
    unsigned terms = 0;
};
/// Enclosure with width below 10^{-digits}.
ConstantEnclosure certified_constant(unsigned digits);

/// Decimal expansion of a number known to lie in [lo, hi]: the digits that
/// truncating lo and hi to `digits` significant places agree on, so every
/// printed digit is certified. Nonnegative inputs.
std::string certified_decimal(const ExactRatio& lo, const ExactRatio& hi, unsigned digits);

struct AsymptoticRow {
    unsigned n = 0;
    ExactInt M;
    /// 2^n - n^2 - 2n - 1 (may be negative).
    long long exponent = 0;
    ExactRatio rho_lower, rho_upper;
    std::string rho; ///< certified decimal
};

struct AsymptoticReport {
    ConstantEnclosure constant;
    std::string constant_decimal;
    std::vector<AsymptoticRow> rows;
};

/// M_n and rho_n = M_n * prod(1 - 2^{-i}) / 2^{2^n - n^2 - 2n - 1} for
/// 2 <= n <= n_max, decimals to `digits` significant places.
AsymptoticReport asymptotic_report(unsigned n_max, unsigned parallelism = 1, unsigned digits = 40);

} // namespace affcount
