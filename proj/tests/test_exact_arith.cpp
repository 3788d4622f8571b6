#include <doctest.h>

#include <numeric>

#include "affcount/exact_arith.hpp"

using namespace affcount;

namespace {

// Naive reference implementations.
std::uint64_t naive_order(std::uint64_t q, std::uint64_t d)
{
    if (d == 1) return 1;
    std::uint64_t x = q % d;
    for (std::uint64_t k = 1;; ++k, x = x * q % d)
        if (x == 1) return k;
}

std::uint64_t naive_phi(std::uint64_t d)
{
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= d; ++k) c += std::gcd(k, d) == 1;
    return c;
}

ExactInt naive_agl(unsigned n, std::uint64_t q)
{
    ExactInt g = ipow(q, n);
    for (unsigned i = 0; i < n; ++i) g *= ipow(q, n) - ipow(q, i);
    return g;
}

} // namespace

TEST_CASE("multiplicative order")
{
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(5, 1) == 1);
    CHECK(multiplicative_order(2, 3) == 2);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9, 16})
        for (std::uint64_t d = 1; d < 300; ++d)
            if (std::gcd(q, d) == 1) CHECK(multiplicative_order(q, d) == naive_order(q, d));
    CHECK_THROWS_AS(multiplicative_order(2, 4), std::invalid_argument);
}

TEST_CASE("euler phi and psi")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(7) == 6);
    CHECK(euler_phi(12) == 4);
    for (std::uint64_t d = 1; d < 500; ++d) CHECK(euler_phi(d) == naive_phi(d));
    CHECK(psi(7, PrimePower(2)) == 2);
    CHECK(psi(3, PrimePower(2)) == 1);
    CHECK(psi(1, PrimePower(2)) == 1);
}

TEST_CASE("p-adic valuation and logs")
{
    CHECK(p_adic_valuation(8, 2) == 3);
    CHECK(p_adic_valuation(12, 2) == 2);
    CHECK(p_adic_valuation(7, 2) == 0);
    CHECK_THROWS_AS(p_adic_valuation(0, 2), std::invalid_argument);
    CHECK(ceil_log(3, 2) == 2);
    CHECK(ceil_log(4, 2) == 2);
    CHECK(ceil_log(1, 3) == 0);
    CHECK(floor_log_plus_one(3, 2) == 2);
    CHECK(floor_log_plus_one(4, 2) == 3);
}

TEST_CASE("group orders")
{
    CHECK(agl_group_order(1, PrimePower(2)) == 2);
    CHECK(agl_group_order(2, PrimePower(2)) == 24);
    CHECK(agl_group_order(3, PrimePower(2)) == 1344);
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9})
        for (unsigned n = 0; n <= 7; ++n) CHECK(agl_group_order(n, PrimePower(q)) == naive_agl(n, q));
}

TEST_CASE("prime powers")
{
    CHECK(PrimePower(9).p() == 3);
    CHECK(PrimePower(9).m() == 2);
    CHECK(PrimePower(512).m() == 9);
    CHECK_THROWS_AS(PrimePower(6), std::invalid_argument);
    CHECK_THROWS_AS(PrimePower(1), std::invalid_argument);
    CHECK_FALSE(PrimePower::is_prime_power(12));
}

TEST_CASE("factorization and divisors")
{
    const auto& f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(divisors(factorize(12)) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    for (std::uint64_t n = 1; n < 2000; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t k = 1; k <= n; ++k) count += n % k == 0;
        CHECK(divisors(factorize(n)).size() == count);
    }
}

TEST_CASE("big integers round-trip")
{
    const ExactInt big = ipow(2, 200) + 12345;
    CHECK(from_decimal(to_decimal(big)) == big);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(20) == from_decimal("2432902008176640000"));
    CHECK(exact_div(ExactInt(120), ExactInt(24), "t") == 5);
    CHECK_THROWS_AS(exact_div(ExactInt(121), ExactInt(24), "t"), InternalFault);
}
