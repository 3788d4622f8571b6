#include "affcount/exact_arith.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace affcount {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f <= n / f; f += 2)
        if (n % f == 0) return false;
    return true;
}

bool PrimePower::is_prime_power(std::uint64_t q) noexcept
{
    if (q < 2) return false;
    std::uint64_t p = 0;
    for (std::uint64_t f = 2; f <= q / f; ++f) {
        if (q % f == 0) { p = f; break; }
    }
    if (p == 0) return true; // q itself prime
    while (q % p == 0) q /= p;
    return q == 1;
}

PrimePower::PrimePower(std::uint64_t q) : q_(q), p_(0), m_(0)
{
    if (!is_prime_power(q))
        throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t f = 2; f <= q / f; ++f) {
        if (q % f == 0) { p = f; break; }
    }
    p_ = p;
    for (std::uint64_t r = q; r > 1; r /= p) ++m_;
}

namespace {

Factorization trial_factor(std::uint64_t n)
{
    Factorization out;
    for (std::uint64_t f = 2; f <= n / f; f += (f == 2 ? 1 : 2)) {
        if (n % f != 0) continue;
        unsigned e = 0;
        while (n % f == 0) { n /= f; ++e; }
        out.emplace_back(f, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace

const Factorization& factorize(std::uint64_t n)
{
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, Factorization> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // unordered_map never invalidates references to elements on insert
    return cache.emplace(n, trial_factor(n)).first->second;
}

std::vector<std::uint64_t> divisors(const Factorization& f)
{
    std::vector<std::uint64_t> out{1};
    for (auto [prime, exp] : f) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept
{
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept
{
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t euler_phi(const Factorization& f) noexcept
{
    std::uint64_t r = 1;
    for (auto [prime, exp] : f) {
        r *= prime - 1;
        for (unsigned e = 1; e < exp; ++e) r *= prime;
    }
    return r;
}

std::uint64_t euler_phi(std::uint64_t d)
{
    if (d < 1) throw std::invalid_argument("euler_phi: d must be >= 1");
    return euler_phi(factorize(d));
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t d)
{
    if (d == 0) throw std::invalid_argument("multiplicative_order: d must be >= 1");
    if (gcd_u64(q % d, d) != 1 && d != 1)
        throw std::invalid_argument("multiplicative_order: gcd(q, d) != 1");
    if (d == 1) return 1;
    // The order divides phi(d); strip prime factors while q^e stays 1.
    std::uint64_t e = euler_phi(d);
    for (auto [prime, exp] : factorize(e)) {
        for (unsigned i = 0; i < exp; ++i) {
            if (powmod(q, e / prime, d) == 1) e /= prime;
            else break;
        }
    }
    return e;
}

std::uint64_t psi(std::uint64_t d, const PrimePower& q)
{
    const std::uint64_t phi = euler_phi(d);
    const std::uint64_t o = multiplicative_order(q.q(), d);
    if (phi % o != 0) throw InternalFault("psi: o_d(q) does not divide phi(d)");
    return phi / o;
}

unsigned p_adic_valuation(std::uint64_t k, std::uint64_t p)
{
    if (k == 0) throw std::invalid_argument("p_adic_valuation: k must be >= 1");
    unsigned e = 0;
    while (k % p == 0) { k /= p; ++e; }
    return e;
}

unsigned ceil_log(std::uint64_t m, std::uint64_t p) noexcept
{
    unsigned e = 0;
    for (std::uint64_t pe = 1; pe < m; pe *= p) ++e;
    return e;
}

unsigned floor_log_plus_one(std::uint64_t t, std::uint64_t p) noexcept
{
    unsigned e = 0;
    for (std::uint64_t pe = 1; pe <= t; pe *= p) ++e;
    return e;
}

bool is_power_of(std::uint64_t t, std::uint64_t p) noexcept
{
    if (t == 0) return false;
    while (t % p == 0) t /= p;
    return t == 1;
}

ExactInt ipow(std::uint64_t base, std::uint64_t exp)
{
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

ExactInt gl_group_order(unsigned n, const PrimePower& q)
{
    const ExactInt qn = ipow(q.q(), n);
    ExactInt r = 1;
    for (unsigned i = 0; i < n; ++i) r *= qn - ipow(q.q(), i);
    return r;
}

ExactInt agl_group_order(unsigned n, const PrimePower& q)
{
    return gl_group_order(n, q) * ipow(q.q(), n);
}

ExactInt binomial(unsigned n, unsigned k)
{
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

ExactInt factorial(unsigned n)
{
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

ExactInt from_decimal(const std::string& s)
{
    ExactInt r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return r;
}

ExactInt exact_div(const ExactInt& num, const ExactInt& den, const char* what)
{
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InternalFault(std::string("non-integral quotient in ") + what);
    ExactInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

} // namespace affcount
