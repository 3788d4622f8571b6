#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "affcount/exact_arith.hpp"

namespace affcount {

/// Field element. For q = p^m the value sum c_i p^i encodes the polynomial
/// sum c_i x^i modulo the fixed irreducible modulus.
using Elem = std::uint16_t;

/// Addition/multiplication tables for F_q, q <= 512.
///
/// Prime fields use residues mod p. For proper prime powers the modulus is
/// the monic irreducible of degree m over F_p with the fewest nonzero
/// coefficients, ties broken by the smallest encoding sum_{i<m} c_i p^i
/// (F_4: x^2+x+1, F_8: x^3+x+1, F_9: x^2+1, F_16: x^4+x+1). The primitive
/// element used for exp/log is the smallest encoded generator of F_q^*.
class FieldTable {
public:
    /// Shared, immutable table for q. Throws std::invalid_argument unless q
    /// is a prime power <= 512.
    static std::shared_ptr<const FieldTable> get(std::uint64_t q);

    explicit FieldTable(const PrimePower& q);

    const PrimePower& order() const noexcept { return q_; }
    unsigned size() const noexcept { return static_cast<unsigned>(q_.q()); }
    unsigned characteristic() const noexcept { return static_cast<unsigned>(q_.p()); }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * size() + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * size() + neg_[b]]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * size() + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    /// Throws std::domain_error for a == 0.
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Coefficients (low degree first) of the modulus over F_p; {0, 1} for
    /// prime fields.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    Elem primitive_element() const noexcept { return primitive_; }
    /// Discrete log base the primitive element; a != 0.
    unsigned log(Elem a) const noexcept { return log_[a]; }
    Elem exp(unsigned k) const noexcept { return exp_[k % (size() - 1)]; }

    /// Checks commutativity, identities and inverses on all pairs.
    bool check_pairwise_axioms() const;

private:
    PrimePower q_;
    std::vector<unsigned> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_, exp_;
    std::vector<unsigned> log_;
    Elem primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const FieldTable>;

/// Univariate polynomial over F_q, coefficients low degree first, no
/// trailing zeros (the zero polynomial is empty).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs);

    static Poly monomial(Elem c, unsigned degree);
    /// x^degree-indexed coefficients from high degree down, e.g. {1,0,1,1}
    /// is x^3 + x + 1.
    static Poly from_high(const std::vector<Elem>& high_first);

    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Elem coeff(unsigned i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    std::string to_string() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<Elem> c_;
};

/// Lexicographic on coefficients from the highest degree down (degree
/// first). Puts x^3+x+1 before x^3+x^2+1.
bool poly_less(const Poly& a, const Poly& b) noexcept;

Poly poly_add(const FieldTable& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldTable& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldTable& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldTable& F, const Poly& a, Elem c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const FieldTable& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldTable& F, const Poly& a, const Poly& b);
Poly poly_gcd(const FieldTable& F, Poly a, Poly b);
Poly poly_pow(const FieldTable& F, const Poly& a, unsigned e);
/// x^e mod m.
Poly poly_x_pow_mod(const FieldTable& F, std::uint64_t e, const Poly& m);
Poly poly_mulmod(const FieldTable& F, const Poly& a, const Poly& b, const Poly& m);

/// Irreducibility by Ben-Or's test: gcd(x^{q^i} - x, f) = 1 for i <= deg/2.
bool is_irreducible(const FieldTable& F, const Poly& f);

/// Irreducibility by trial division against every monic polynomial of
/// degree <= deg/2. Slow; for cross-checking.
bool is_irreducible_trial(const FieldTable& F, const Poly& f);

/// Least e >= 1 with f | x^e - 1; f(0) != 0.
std::uint64_t poly_order(const FieldTable& F, const Poly& f);

} // namespace affcount
