#include <doctest.h>

#include "affcount/class_formulas.hpp"
#include "affcount/class_reps.hpp"

using namespace affcount;

TEST_CASE("irreducibles of a given order")
{
    const auto i7 = irreducibles_of_order(7, PrimePower(2));
    REQUIRE(i7.size() == 2);
    CHECK(i7[0].f == Poly::from_high({1, 0, 1, 1}));
    CHECK(i7[1].f == Poly::from_high({1, 1, 0, 1}));
    CHECK(i7[0].degree == 3);

    const auto i3 = irreducibles_of_order(3, PrimePower(2));
    REQUIRE(i3.size() == 1);
    CHECK(i3[0].f == Poly::from_high({1, 1, 1}));

    for (std::uint64_t q : {2, 3, 5}) {
        const auto i1 = irreducibles_of_order(1, PrimePower(q));
        REQUIRE(i1.size() == 1);
        CHECK(i1[0].f == Poly({static_cast<Elem>(q - 1), 1}));
    }
    CHECK_THROWS_AS(irreducibles_of_order(4, PrimePower(2)), std::invalid_argument);
}

TEST_CASE("irreducible scan against the trial-division reference")
{
    for (std::uint64_t qv : {2, 3, 4}) {
        const PrimePower q(qv);
        const AglContext ctx(qv == 2 ? 6 : 3, q);
        for (const auto& info : ctx.D()) {
            const auto fast = irreducibles_of_order(info.d, q);
            const auto ref = irreducibles_of_order_reference(info.d, q);
            REQUIRE(fast.size() == ref.size());
            CHECK(fast.size() == info.psi);
            for (std::size_t i = 0; i < fast.size(); ++i) {
                CHECK(fast[i].f == ref[i].f);
                CHECK(fast[i].order == info.d);
            }
        }
    }
}

TEST_CASE("tiny representatives")
{
    const AglContext ctx(1, PrimePower(2));
    ClassIndex id;
    id.lam = Partition({1});
    CHECK(build_representative(ctx, id).is_identity());
    ClassIndex tr = id;
    tr.marker_t = 1;
    const auto F2 = FieldTable::get(2);
    CHECK(build_representative(ctx, tr) == AffineMap::translation({1}, F2));

    const ClassVerification v = verify_class(ctx, tr);
    CHECK(v.ok());

    const AglContext c2(2, PrimePower(2));
    ClassIndex rot;
    rot.lam_d = {PartitionTuple{3, 1, {Partition({1})}}};
    const AffineMap r = build_representative(c2, rot);
    CHECK(affine_order(r) == 3);
    CHECK(cyclic_orbit_count(r) == 2);
    CHECK(verify_class(c2, rot).ok());
}

TEST_CASE("worked example representatives are 36-dimensional")
{
    const AglContext ctx(36, PrimePower(2));
    ClassIndex idx;
    idx.lam = Partition({3, 0, 1});
    idx.lam_d = {PartitionTuple{7, 2, {Partition({1, 2}), Partition({2, 0, 1})}}};
    CHECK(build_representative(ctx, idx).dim() == 36);
    idx.marker_t = 3;
    const AffineMap beta = build_representative(ctx, idx);
    CHECK(beta.dim() == 36);
    CHECK_FALSE(beta.translation() == std::vector<Elem>(36, 0));
}

TEST_CASE("every class matches its formulas")
{
    struct Case {
        std::uint64_t q;
        unsigned n;
    };
    for (const Case c : {Case{2, 4}, Case{3, 3}, Case{4, 2}, Case{5, 2}, Case{7, 2}, Case{8, 2}, Case{9, 2}}) {
        const AglContext ctx(c.n, PrimePower(c.q));
        enumerate_classes(ctx, [&](const ClassIndex& idx) {
            const ClassVerification v = verify_class(ctx, idx);
            CHECK_MESSAGE(v.ok(), v.describe_failures());
        });
    }
}
