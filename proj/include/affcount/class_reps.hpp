#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affcount/gf_field.hpp"
#include "affcount/gf_matrix.hpp"
#include "affcount/partition.hpp"

namespace affcount {

/// Monic irreducible f over F_q whose roots have multiplicative order d.
struct IrreducibleRecord {
    Poly f;
    unsigned degree = 0;
    std::uint64_t order = 0;
};

/// The psi(d) monic irreducibles of order d, sorted by poly_less. Found by
/// scanning all monic polynomials of degree o_d(q) (cached per (q, degree)).
/// Throws std::invalid_argument if gcd(d, q) != 1, d == 0, or q^degree > 2^20.
std::vector<IrreducibleRecord> irreducibles_of_order(std::uint64_t d, const PrimePower& q);

/// Same list, with irreducibility decided by trial division and the order
/// by stepping x^e. Slow; a cross-check for small degrees.
std::vector<IrreducibleRecord> irreducibles_of_order_reference(std::uint64_t d, const PrimePower& q);

/// Explicit representative of the class: unipotent blocks J_j (ascending j,
/// lambda_j copies each; for translation type the first J_t carries
/// e_1 = (1,0,...,0)), then for each d ascending the full tuple (empty
/// entries first) assigned to the irreducibles of order d in sorted order,
/// one companion block of f^j per part j.
AffineMap build_representative(const AglContext& ctx, const ClassIndex& idx);

struct ClassCheck {
    std::string what;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct ClassVerification {
    ClassIndex index;
    std::vector<ClassCheck> checks;

    bool ok() const noexcept;
    /// One line per failed check, with the class index.
    std::string describe_failures() const;
};

/// Compares the built representative against the closed forms: order,
/// fixed points of every power s^k with k | order, and cyclic orbit count.
/// Throws std::invalid_argument if q^n > 2^20.
ClassVerification verify_class(const AglContext& ctx, const ClassIndex& idx);

} // namespace affcount
