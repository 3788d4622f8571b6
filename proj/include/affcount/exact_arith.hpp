#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace affcount {

/// Arbitrary-precision integer. All orbit counts, centralizer sizes and group
/// orders live here; they routinely exceed 64 bits.
using ExactInt = mpz_class;

/// Reduced rational with positive denominator (mpq_class canonicalizes).
using ExactRatio = mpq_class;

/// Raised when an identity that must hold exactly (integrality of a Burnside
/// sum, divisibility of a centralizer product) fails. Always a bug, never a
/// user error.
class InternalFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Prime factorization as (prime, exponent) pairs with increasing primes.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// q = p^m with p prime.
class PrimePower {
public:
    /// Throws std::invalid_argument if q is not a prime power >= 2.
    explicit PrimePower(std::uint64_t q);

    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }

    static bool is_prime_power(std::uint64_t q) noexcept;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;

private:
    std::uint64_t q_;
    std::uint64_t p_;
    unsigned m_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Trial-division factorization. Results are memoized; the cache is shared
/// and thread-safe.
const Factorization& factorize(std::uint64_t n);

/// Divisors of the number with the given factorization, ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

/// a*b mod m without overflow.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Smallest e >= 1 with q^e = 1 (mod d). Throws std::invalid_argument when
/// gcd(q, d) != 1 or d == 0.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t d);

/// Euler's totient. Throws std::invalid_argument for d < 1.
std::uint64_t euler_phi(std::uint64_t d);
std::uint64_t euler_phi(const Factorization& f) noexcept;

/// Number of monic irreducibles over F_q whose roots have order d:
/// phi(d) / o_d(q).
std::uint64_t psi(std::uint64_t d, const PrimePower& q);

/// Largest e with p^e | k. Throws std::invalid_argument for k == 0.
unsigned p_adic_valuation(std::uint64_t k, std::uint64_t p);

/// Smallest e >= 0 with p^e >= m (ceil(log_p m)); m >= 1.
unsigned ceil_log(std::uint64_t m, std::uint64_t p) noexcept;

/// 1 + floor(log_p t): smallest e with p^e > t; t >= 1.
unsigned floor_log_plus_one(std::uint64_t t, std::uint64_t p) noexcept;

bool is_power_of(std::uint64_t t, std::uint64_t p) noexcept;

ExactInt ipow(std::uint64_t base, std::uint64_t exp);

/// |AGL(n, F_q)| = q^n * prod_{i<n} (q^n - q^i). Equals 1 for n = 0.
ExactInt agl_group_order(unsigned n, const PrimePower& q);

/// |GL(n, F_q)|.
ExactInt gl_group_order(unsigned n, const PrimePower& q);

ExactInt binomial(unsigned n, unsigned k);
ExactInt factorial(unsigned n);

inline std::string to_decimal(const ExactInt& v) { return v.get_str(10); }

/// Parses a decimal string; throws std::invalid_argument on bad input.
ExactInt from_decimal(const std::string& s);

/// Exact quotient; throws InternalFault if `den` does not divide `num`.
ExactInt exact_div(const ExactInt& num, const ExactInt& den, const char* what);

} // namespace affcount
