#include <doctest.h>

#include <bit>
#include <random>

#include "affcount/class_formulas.hpp"
#include "affcount/compound.hpp"
#include "affcount/group_oracle.hpp"
#include "affcount/rm_action.hpp"

using namespace affcount;

namespace {

const FieldPtr& f2()
{
    static const FieldPtr F = FieldTable::get(2);
    return F;
}

AffineMap random_affine(unsigned n, std::mt19937_64& rng)
{
    for (;;) {
        std::vector<Elem> d(n * n), a(n);
        for (auto& e : d) e = static_cast<Elem>(rng() & 1);
        for (auto& e : a) e = static_cast<Elem>(rng() & 1);
        GFMatrix m(n, n, f2(), std::move(d));
        if (is_invertible(m)) return AffineMap(std::move(m), std::move(a));
    }
}

AnfPoly random_poly(unsigned n, std::mt19937_64& rng)
{
    std::vector<std::uint32_t> ms;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (rng() & 1) ms.push_back(m);
    return AnfPoly(n, ms);
}

// bitmask x (bit i-1 = x_i) as a point of F_2^n and back
std::uint32_t apply_mask(const AffineMap& s, std::uint32_t x)
{
    std::vector<Elem> p(s.dim());
    for (unsigned i = 0; i < s.dim(); ++i) p[i] = (x >> i) & 1;
    const auto y = s.apply(p);
    std::uint32_t r = 0;
    for (unsigned i = 0; i < s.dim(); ++i) r |= std::uint32_t{y[i]} << i;
    return r;
}

} // namespace

TEST_CASE("ANF basics")
{
    const AnfPoly x1 = AnfPoly::variable(2, 1), x2 = AnfPoly::variable(2, 2);
    CHECK((x1 * x2 + x2 + AnfPoly::constant(2, true)).to_string() == "X1X2+X2+1");
    CHECK((x1 + x1).is_zero());
    CHECK((x1 * x1) == x1);
    CHECK((x1 * x2).degree() == 2);
    CHECK(AnfPoly(2).degree() == -1);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const AnfPoly f = random_poly(5, rng);
        CHECK(AnfPoly::from_truth_table(5, f.truth_table()) == f);
    }
}

TEST_CASE("substitution examples")
{
    const AnfPoly x1 = AnfPoly::variable(2, 1), x2 = AnfPoly::variable(2, 2);
    const AnfPoly one = AnfPoly::constant(2, true);
    CHECK(anf_substitute(x1, AffineMap::translation({1, 0}, f2())) == x1 + one);
    const AffineMap swap = AffineMap::linear(GFMatrix(2, 2, f2(), {0, 1, 1, 0}));
    CHECK(anf_substitute(x1 * x2, swap) == x1 * x2);
    // X1 -> X1 + X2: column 1 of A is (1, 1)
    const AffineMap shear = AffineMap::linear(GFMatrix(2, 2, f2(), {1, 0, 1, 1}));
    CHECK(anf_substitute(x1 * x2, shear) == x1 * x2 + x2);
    CHECK_THROWS_AS(anf_substitute(x1, AffineMap::identity(3, f2())), std::invalid_argument);
}

TEST_CASE("substitution agrees with evaluation at s(x)")
{
    std::mt19937_64 rng(2);
    for (unsigned n = 1; n <= 6; ++n)
        for (int t = 0; t < 20; ++t) {
            const AnfPoly f = random_poly(n, rng);
            const AffineMap s = random_affine(n, rng);
            const AnfPoly g = anf_substitute(f, s);
            for (std::uint32_t x = 0; x < (1u << n); ++x) CHECK(g.evaluate(x) == f.evaluate(apply_mask(s, x)));
            CHECK(g.degree() == f.degree());
            CHECK(anf_substitute(g, inverse(s)) == f);
        }
}

TEST_CASE("quotient basis")
{
    const RMQuotientBasis b(4, 0, 2);
    CHECK(b.size() == 10);
    CHECK(b.mask(0) == 0b0011);
    CHECK(b.mask(1) == 0b0101);
    CHECK(b.mask(6) == 0b0001);
    CHECK(b.degree_block(2) == std::pair<unsigned, unsigned>{0, 6});
    CHECK(b.index_of(0b0100) == 8);
    CHECK(b.index_of(0) == -1);
    for (unsigned n = 1; n <= 8; ++n)
        for (int s = -1; s < static_cast<int>(n); ++s)
            for (unsigned r = s + 1; r <= n; ++r) {
                ExactInt expect = 0;
                for (unsigned k = s + 1; k <= r; ++k) expect += binomial(n, k);
                CHECK(RMQuotientBasis(n, s, r).size() == expect);
            }
    CHECK_THROWS_AS(RMQuotientBasis(3, 2, 2), std::invalid_argument);
}

TEST_CASE("action matrix conventions")
{
    CHECK(action_matrix(AffineMap::identity(4, f2()), RMQuotientBasis(4, 0, 3)) ==
          GFMatrix::identity(14, f2()));
    const AffineMap swap = AffineMap::linear(GFMatrix(2, 2, f2(), {0, 1, 1, 0}));
    CHECK(action_matrix(swap, RMQuotientBasis(2, 1, 2)) == GFMatrix(1, 1, f2(), {1}));

    std::mt19937_64 rng(3);
    for (unsigned n = 2; n <= 5; ++n) {
        const RMQuotientBasis basis(n, -1, n);
        for (int t = 0; t < 10; ++t) {
            const AffineMap s = random_affine(n, rng), u = random_affine(n, rng);
            CHECK(action_matrix(compose(s, u), basis) == action_matrix(u, basis) * action_matrix(s, basis));
            CHECK(transpose(action_matrix(s, basis)) == action_rows(s, basis).to_gf(f2()));
        }
    }
}

TEST_CASE("diagonal blocks are compound matrices")
{
    std::mt19937_64 rng(4);
    for (unsigned n = 1; n <= 6; ++n) {
        const RMQuotientBasis basis(n, 0, n);
        for (int t = 0; t < 5; ++t) {
            const AffineMap s = random_affine(n, rng);
            const GFMatrix m = action_matrix(s, basis);
            for (unsigned k = 1; k <= n; ++k) {
                const auto [lo, hi] = basis.degree_block(k);
                std::vector<unsigned> idx;
                for (unsigned i = lo; i < hi; ++i) idx.push_back(i);
                CHECK(submatrix(m, idx, idx) == compound_matrix(s.matrix(), k));
            }
        }
    }
}

TEST_CASE("fixed cosets")
{
    for (unsigned n = 2; n <= 8; ++n) {
        const RMQuotientBasis basis(n, -1, n - 2);
        CHECK(fix_on_quotient(AffineMap::identity(n, f2()), basis) ==
              ipow(2, (std::uint64_t{1} << n) - n - 1));
        std::vector<Elem> e(n, 0);
        e[n - 1] = 1;
        CHECK(fix_on_quotient(AffineMap::translation(e, f2()), basis) ==
              ipow(2, (std::uint64_t{1} << (n - 1)) - 1));
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) CHECK(fix_on_quotient(random_affine(2, rng), RMQuotientBasis(2, -1, 0)) == 2);
}

TEST_CASE("fixed cosets by direct count")
{
    // all of R(top, n) / R(floor, n) enumerated as coefficient vectors
    std::mt19937_64 rng(6);
    for (unsigned n = 2; n <= 4; ++n)
        for (int floor = -1; floor < static_cast<int>(n) - 1; ++floor) {
            const RMQuotientBasis basis(n, floor, n - 1);
            if (basis.size() > 16) continue;
            for (int t = 0; t < 5; ++t) {
                const AffineMap s = random_affine(n, rng);
                std::uint64_t fixed = 0;
                for (std::uint32_t v = 0; v < (1u << basis.size()); ++v) {
                    std::vector<std::uint32_t> ms;
                    for (unsigned i = 0; i < basis.size(); ++i)
                        if ((v >> i) & 1) ms.push_back(basis.mask(i));
                    const AnfPoly f(n, ms);
                    AnfPoly diff = anf_substitute(f, s) + f;
                    bool zero = true;
                    for (auto m : diff.monomials()) zero = zero && std::popcount(m) <= floor;
                    fixed += zero;
                }
                CHECK(fix_on_quotient(s, basis) == fixed);
            }
        }
}

TEST_CASE("fixed cosets are a class function")
{
    std::mt19937_64 rng(7);
    for (unsigned n = 2; n <= 5; ++n) {
        const RMQuotientBasis basis(n, -1, n - 2);
        for (int t = 0; t < 10; ++t) {
            const AffineMap s = random_affine(n, rng), g = random_affine(n, rng);
            CHECK(fix_on_quotient(s, basis) == fix_on_quotient(compose(g, compose(s, inverse(g))), basis));
        }
    }
}

TEST_CASE("theta")
{
    CHECK(theta(2, 0, 0) == 2);
    for (unsigned n = 1; n <= 4; ++n) CHECK(theta(n, 0, n) == count_function_classes(n, PrimePower(2)).count);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned s = 0; s <= n; ++s)
            for (unsigned r = s; r <= n; ++r) CHECK(theta(n, s, r) == theta(n, n - r, n - s));
    CHECK_THROWS_AS(theta(3, 2, 1), std::invalid_argument);
    CHECK(theta(7, 0, 5, 1) == theta(7, 0, 5, 4));
}

TEST_CASE("coset class counts")
{
    CHECK(coset_class_count_M(2) == 2);
    CHECK(coset_class_count_M(3) == 3);
    CHECK(coset_class_count_M(4) == burnside_full_quotient(4, 0, 2));
    for (unsigned n = 2; n <= 3; ++n) {
        CHECK(coset_class_count_M(n) == orbit_enumeration_quotient(n, 0, n - 2));
        CHECK(coset_class_count_M(n) == burnside_full_quotient(n, 0, n - 2));
    }
    for (unsigned n = 2; n <= 7; ++n) CHECK(coset_class_count_M(n) == theta(n, 2, n));
}
