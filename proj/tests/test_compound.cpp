#include <doctest.h>

#include <random>

#include "affcount/compound.hpp"

using namespace affcount;

namespace {

GFMatrix random_matrix(unsigned n, const FieldPtr& F, std::mt19937_64& rng)
{
    std::vector<Elem> d(n * n);
    for (auto& e : d) e = static_cast<Elem>(rng() % F->size());
    return GFMatrix(n, n, F, std::move(d));
}

// Leibniz-formula determinant over any field, for the minor oracle.
Elem leibniz_det(const GFMatrix& m)
{
    const FieldTable& F = m.field();
    const unsigned n = m.rows();
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    Elem det = 0;
    do {
        unsigned inversions = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Elem prod = 1;
        for (unsigned i = 0; i < n; ++i) prod = F.mul(prod, m.at(i, perm[i]));
        det = inversions % 2 ? F.sub(det, prod) : F.add(det, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

TEST_CASE("subset index")
{
    const SubsetIndex s(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.subset(0) == std::vector<unsigned>{0, 1});
    CHECK(s.subset(5) == std::vector<unsigned>{2, 3});
    CHECK(s.index_of(0b1001) == 2);
    CHECK_THROWS_AS(s.index_of(0b111), std::out_of_range);
    CHECK(SubsetIndex(5, 0).size() == 1);
}

TEST_CASE("compound entries are minors")
{
    std::mt19937_64 rng(1);
    for (std::uint64_t q : {2, 3, 5}) {
        const auto F = FieldTable::get(q);
        const GFMatrix a = random_matrix(5, F, rng);
        for (unsigned r = 0; r <= 5; ++r) {
            const SubsetIndex idx(5, r);
            const GFMatrix c = compound_matrix(a, r);
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < idx.size(); ++j) {
                    const Elem expect = r == 0 ? Elem{1} : leibniz_det(submatrix(a, idx.subset(i), idx.subset(j)));
                    CHECK(c.at(i, j) == expect);
                    CHECK(compound_entry(a, idx.mask(i), idx.mask(j)) == expect);
                }
        }
    }
}

TEST_CASE("compound of a product")
{
    std::mt19937_64 rng(2);
    for (std::uint64_t q : {2, 3}) {
        const auto F = FieldTable::get(q);
        for (int t = 0; t < 10; ++t) {
            const GFMatrix a = random_matrix(5, F, rng), b = random_matrix(5, F, rng);
            for (unsigned r = 0; r <= 5; ++r)
                CHECK(compound_matrix(a * b, r) == compound_matrix(a, r) * compound_matrix(b, r));
        }
    }
    const auto F2 = FieldTable::get(2);
    CHECK(compound_matrix(GFMatrix::identity(4, F2), 2) == GFMatrix::identity(6, F2));
    CHECK_THROWS_AS(compound_matrix(GFMatrix::identity(3, F2), 4), std::invalid_argument);
}

TEST_CASE("Kronecker embedding")
{
    std::mt19937_64 rng(3);
    const auto F2 = FieldTable::get(2);
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 4; ++n)
            for (int t = 0; t < 5; ++t) {
                const GFMatrix a = random_matrix(m, F2, rng), b = random_matrix(n, F2, rng);
                for (unsigned k = 0; k <= m; ++k)
                    for (unsigned l = 0; l <= n; ++l) CHECK(check_kronecker_embedding(a, b, k, l));
            }
    const auto F3 = FieldTable::get(3);
    const GFMatrix a = random_matrix(3, F3, rng), b = random_matrix(2, F3, rng);
    CHECK(check_kronecker_embedding(a, b, 0, 0));
    CHECK(check_kronecker_embedding(a, b, 3, 2));
    CHECK(check_kronecker_embedding(a, b, 2, 1));
}

TEST_CASE("Jordan block compounds")
{
    CHECK(check_jordan_block_structure(2, 1));
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned r = 1; r <= n; ++r) CHECK(check_jordan_block_structure(n, r));
}

TEST_CASE("rank bound")
{
    CHECK(compound_jordan_defect_rank(2, 1) == 1);
    for (unsigned n = 1; n <= 9; ++n) {
        CHECK(compound_jordan_defect_rank(n, n) == 0);
        for (unsigned r = 1; r <= n; ++r) {
            CHECK(check_rank_bound(n, r));
            const auto F2 = FieldTable::get(2);
            const GFMatrix c = compound_matrix(jordan_block(n, F2), r);
            CHECK(compound_jordan_defect_rank(n, r) == rank(c - GFMatrix::identity(c.rows(), F2)));
        }
    }
    CHECK(check_rank_bound(3, 5));
}

TEST_CASE("certified constant")
{
    const ConstantEnclosure c = certified_constant(42);
    CHECK(c.lower < c.upper);
    CHECK(c.upper - c.lower < ExactRatio(ExactInt(1), ipow(10, 42)));
    const std::string d = certified_decimal(c.lower, c.upper, 40);
    CHECK(d.rfind("0.288788095086602421278899721929230780088", 0) == 0);
    CHECK(certified_decimal(ExactRatio(1, 3), ExactRatio(1, 3), 5) == "0.33333");
    CHECK(certified_decimal(ExactRatio(3, 2), ExactRatio(3, 2), 4) == "1.500");
}

TEST_CASE("asymptotic table")
{
    const AsymptoticReport r = asymptotic_report(6);
    REQUIRE(r.rows.size() == 5);
    CHECK(r.rows[0].n == 2);
    CHECK(r.rows[0].M == 2);
    CHECK(r.rows[1].M == 3);
    CHECK(r.rows[2].M == 8);
    CHECK(r.rows[3].M == 48);
    CHECK(r.rows[4].M == 150357);
    CHECK(r.rows[4].exponent == 15);
    CHECK(r.rows[4].rho.rfind("1.3251", 0) == 0);
    for (const auto& row : r.rows) CHECK(row.rho_lower <= row.rho_upper);
}
