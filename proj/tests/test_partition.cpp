#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "affcount/partition.hpp"

using namespace affcount;

namespace {

// Number of partitions of n by the standard recursion on the largest part.
std::uint64_t partition_count(unsigned n, unsigned max_part)
{
    if (n == 0) return 1;
    std::uint64_t c = 0;
    for (unsigned k = 1; k <= std::min(n, max_part); ++k) c += partition_count(n - k, k);
    return c;
}

// Multisets of psi partitions (empties allowed) with total weight w:
// coefficient of x^w y^psi in prod over partitions p of 1/(1 - y x^|p|).
std::uint64_t tuple_count(unsigned w, std::uint64_t psi)
{
    std::vector<std::vector<std::uint64_t>> dp(w + 1, std::vector<std::uint64_t>(psi + 1, 0));
    dp[0][0] = 1;
    for (unsigned pw = 0; pw <= w; ++pw)
        for (std::uint64_t kind = 0; kind < partition_count(pw, pw); ++kind)
            for (unsigned x = pw; x <= w; ++x)
                for (std::uint64_t y = 1; y <= psi; ++y) dp[x][y] += dp[x - pw][y - 1];
    return dp[w][psi];
}

} // namespace

TEST_CASE("partition order")
{
    CHECK(partition_compare(Partition({3}), Partition({1, 1})) == std::strong_ordering::less);
    CHECK(partition_compare(Partition({1, 1}), Partition({0, 0, 1})) == std::strong_ordering::less);
    CHECK(partition_compare(Partition({2}), Partition({2})) == std::strong_ordering::equal);
    CHECK(Partition::from_parts({3, 1, 1, 1}) == Partition({3, 0, 1}));
    CHECK(Partition({0, 2, 0, 0}).multiplicities() == std::vector<unsigned>{0, 2});
    CHECK(Partition({3, 0, 1}).weight() == 6);
}

TEST_CASE("partition enumeration")
{
    REQUIRE(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    const auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({1, 1}));
    CHECK(p3[2] == Partition({0, 0, 1}));
    CHECK(enumerate_partitions(4).size() == 5);
    for (unsigned n = 0; n <= 20; ++n) {
        const auto ps = enumerate_partitions(n);
        CHECK(ps.size() == partition_count(n, n));
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);
        for (const auto& p : ps) CHECK(p.weight() == n);
    }
}

TEST_CASE("index set D")
{
    CHECK(compute_D(1, PrimePower(2)).empty());
    CHECK(compute_D(2, PrimePower(2)) == std::vector<std::uint64_t>{3});
    CHECK(compute_D(2, PrimePower(3)) == std::vector<std::uint64_t>{2, 4, 8});
}

TEST_CASE("omega enumeration")
{
    std::vector<ClassIndex> got;
    enumerate_omega(AglContext(1, PrimePower(2)), [&](const ClassIndex& i) { got.push_back(i); });
    REQUIRE(got.size() == 1);
    CHECK(got[0].lam == Partition({1}));

    got.clear();
    enumerate_omega(AglContext(2, PrimePower(2)), [&](const ClassIndex& i) { got.push_back(i); });
    REQUIRE(got.size() == 3);
    CHECK(got[0].lam == Partition({2}));
    CHECK(got[1].lam == Partition({0, 1}));
    CHECK(got[2].lam.empty());
    REQUIRE(got[2].lam_d.size() == 1);
    CHECK(got[2].lam_d[0].d == 3);
    CHECK(got[2].lam_d[0].parts == std::vector<Partition>{Partition({1})});
}

TEST_CASE("omega enumeration matches an independent count")
{
    for (std::uint64_t qv : {2, 3, 4}) {
        const PrimePower q(qv);
        for (unsigned n = 1; n <= 5; ++n) {
            const AglContext ctx(n, q);
            std::uint64_t got = 0;
            std::set<std::string> seen;
            enumerate_omega(ctx, [&](const ClassIndex& i) {
                ++got;
                seen.insert(i.to_string());
            });
            CHECK(seen.size() == got);
            // convolution over d of tuple counts
            std::vector<std::uint64_t> ways(n + 1, 0);
            ways[0] = 1;
            for (const auto& info : ctx.D()) {
                std::vector<std::uint64_t> next(n + 1, 0);
                for (unsigned w = 0; w <= n; ++w)
                    for (unsigned k = 0; w + k * info.degree <= n; ++k)
                        next[w + k * info.degree] += ways[w] * tuple_count(k, info.psi);
                ways = next;
            }
            std::uint64_t expected = 0;
            for (unsigned w = 0; w <= n; ++w) expected += ways[w] * partition_count(n - w, n - w);
            CHECK_MESSAGE(got == expected, "q=" << qv << " n=" << n);
        }
    }
}

TEST_CASE("tuple permutation count")
{
    PartitionTuple t{7, 2, {Partition({1, 2}), Partition({2, 0, 1})}};
    CHECK(permutation_count_s(t) == 2);
    PartitionTuple u{7, 2, {Partition({1}), Partition({1})}};
    CHECK(permutation_count_s(u) == 1);
    PartitionTuple e{7, 3, {}};
    CHECK(permutation_count_s(e) == 1);
    PartitionTuple m{31, 6, {Partition({1})}};
    CHECK(permutation_count_s(m) == 6);
}

TEST_CASE("translation markers")
{
    const AglContext ctx(3, PrimePower(2));
    std::size_t markers = 0;
    enumerate_classes(ctx, [&](const ClassIndex& i) {
        if (i.marker_t) {
            ++markers;
            CHECK(i.lam[*i.marker_t] > 0);
        }
    });
    CHECK(markers > 0);
    ClassIndex bad;
    bad.lam = Partition({1});
    CHECK_THROWS_AS(ctx.validate(bad), std::invalid_argument);
}
