#include <doctest.h>

#include "affcount/class_formulas.hpp"
#include "affcount/class_reps.hpp"
#include "affcount/gf_matrix.hpp"

using namespace affcount;

namespace {

ClassIndex worked_example(bool marker)
{
    ClassIndex idx;
    idx.lam = Partition({3, 0, 1});
    idx.lam_d = {PartitionTuple{7, 2, {Partition({1, 2}), Partition({2, 0, 1})}}};
    if (marker) idx.marker_t = 3;
    return idx;
}

ClassIndex simple(std::vector<unsigned> lam, std::optional<unsigned> t = {})
{
    ClassIndex idx;
    idx.lam = Partition(std::move(lam));
    idx.marker_t = t;
    return idx;
}

} // namespace

TEST_CASE("worked example centralizers")
{
    const AglContext ctx(36, PrimePower(2));
    CHECK(centralizer_order(ctx, worked_example(false)) == ipow(2, 63) * ipow(3, 5) * ipow(7, 7));
    CHECK(centralizer_order(ctx, worked_example(true)) == ipow(2, 60) * ipow(3, 5) * ipow(7, 7));
}

TEST_CASE("worked example order and fixed points")
{
    const AglContext ctx(36, PrimePower(2));
    CHECK(element_order(ctx, worked_example(true)) == 28);
    CHECK(fix_exponent_at(ctx, worked_example(false), 1) == std::optional<std::uint64_t>{4});

    // the closed forms against the explicit 36-dimensional matrices
    const AffineMap alpha = build_representative(ctx, worked_example(false));
    const AffineMap beta = build_representative(ctx, worked_example(true));
    CHECK(alpha.dim() == 36);
    CHECK(fixed_point_count(alpha) == 16);
    CHECK(affine_order(beta) == 28);
    CHECK(fixed_point_count(beta) == 0);
    const ExactInt o = element_order(ctx, worked_example(false));
    CHECK(fix_exponent_at(ctx, worked_example(false), o.get_ui()) == std::optional<std::uint64_t>{36});
}

TEST_CASE("small classes")
{
    const AglContext c1(1, PrimePower(2));
    CHECK(element_order(c1, simple({1})) == 1);
    CHECK(element_order(c1, simple({1}, 1)) == 2);
    CHECK_FALSE(fix_exponent_at(c1, simple({1}, 1), 1).has_value());
    CHECK(orbit_exponent(c1, simple({1})) == 2);
    CHECK(orbit_exponent(c1, simple({1}, 1)) == 1);

    const AglContext c2(2, PrimePower(2));
    CHECK(centralizer_order(c2, simple({2})) == 24);
    ClassIndex rot;
    rot.lam_d = {PartitionTuple{3, 1, {Partition({1})}}};
    CHECK(orbit_exponent(c2, rot) == 2);
    CHECK(element_order(c2, rot) == 3);
}

TEST_CASE("function class counts")
{
    CHECK(count_function_classes(1, PrimePower(2)).count == 3);
    CHECK(count_function_classes(2, PrimePower(2)).count == 5);
    CHECK(count_function_classes(1, PrimePower(3)).count == 10);
    CHECK(count_function_classes(0, PrimePower(2)).count == 2);
    CHECK(count_function_classes(0, PrimePower(7)).count == 7);
}

TEST_CASE("conjugacy class counts")
{
    CHECK(conjugacy_class_count(AglContext(1, PrimePower(2))) == 2);
    CHECK(conjugacy_class_count(AglContext(2, PrimePower(2))) == 5);
    CHECK(conjugacy_class_count(AglContext(1, PrimePower(3))) == 3);
}

TEST_CASE("class equation")
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (unsigned n = 1; n <= (q <= 5 ? 6u : 4u); ++n) {
            const AglContext ctx(n, PrimePower(q));
            CHECK_MESSAGE(class_equation_sum(ctx) == ctx.group_order(), "q=" << q << " n=" << n);
        }
}

TEST_CASE("results do not depend on parallelism")
{
    for (unsigned n : {6u, 9u}) {
        const auto a = count_function_classes(n, PrimePower(2), 1);
        const auto b = count_function_classes(n, PrimePower(2), 4);
        CHECK(a.count == b.count);
        CHECK(a.burnside_sum == b.burnside_sum);
        CHECK(a.index_count == b.index_count);
    }
    const AglContext ctx(5, PrimePower(3));
    CHECK(class_equation_sum(ctx, 1) == class_equation_sum(ctx, 3));
}

TEST_CASE("invalid indices are rejected")
{
    const AglContext ctx(3, PrimePower(2));
    CHECK_THROWS_AS(centralizer_order(ctx, simple({1})), std::invalid_argument);
    CHECK_THROWS_AS(centralizer_order(ctx, simple({3}, 2)), std::invalid_argument);
}
