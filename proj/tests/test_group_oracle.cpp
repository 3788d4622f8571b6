#include <doctest.h>

#include "affcount/class_formulas.hpp"
#include "affcount/group_oracle.hpp"

using namespace affcount;

TEST_CASE("element enumeration")
{
    std::uint64_t count = 0;
    for_each_group_element(2, PrimePower(3), [&](const AffineMap&) { ++count; });
    CHECK(ExactInt(static_cast<unsigned long>(count)) == agl_group_order(2, PrimePower(3)));
}

TEST_CASE("generators reach the whole group")
{
    for (std::uint64_t q : {2, 3, 4}) {
        const unsigned n = q == 4 ? 1 : 2;
        const GroupElementTable table(n, PrimePower(q));
        std::vector<std::size_t> gens;
        for (const auto& g : agl_generators(n, PrimePower(q))) gens.push_back(*table.find(g));
        std::vector<bool> seen(table.size(), false);
        std::vector<std::size_t> stack{*table.find(AffineMap::identity(n, FieldTable::get(q)))};
        seen[stack[0]] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t g : gens) {
                const std::size_t y = table.compose(g, x);
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        CHECK(reached == table.size());
    }
}

TEST_CASE("full-group Burnside")
{
    CHECK(burnside_full(1, PrimePower(2)) == 3);
    CHECK(burnside_full(2, PrimePower(2)) == 5);
    CHECK(burnside_full(1, PrimePower(3)) == 10);
}

TEST_CASE("orbit enumeration")
{
    CHECK(orbit_enumeration(1, PrimePower(2)) == 3);
    CHECK(orbit_enumeration(2, PrimePower(2)) == 5);
    CHECK(orbit_enumeration(2, PrimePower(3)) == burnside_full(2, PrimePower(3)));
    CHECK(orbit_enumeration(3, PrimePower(2)) == burnside_full(3, PrimePower(2)));
    CHECK_THROWS_AS(orbit_enumeration(3, PrimePower(3)), std::invalid_argument);
}

TEST_CASE("brute centralizers")
{
    const GroupElementTable t(2, PrimePower(2));
    const auto F2 = FieldTable::get(2);
    CHECK(brute_centralizer(t, AffineMap::identity(2, F2)) == 24);
    CHECK(brute_centralizer(t, AffineMap::translation({1, 0}, F2)) == 8);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(ExactInt(24) % brute_centralizer(t, t.element(i)) == 0);
}

TEST_CASE("brute conjugacy classes")
{
    CHECK(brute_conjugacy_classes(GroupElementTable(1, PrimePower(2))) == 2);
    CHECK(brute_conjugacy_classes(GroupElementTable(2, PrimePower(2))) == 5);
    CHECK(brute_conjugacy_classes(GroupElementTable(1, PrimePower(3))) == 3);
}

TEST_CASE("table operations")
{
    const GroupElementTable t(1, PrimePower(5));
    CHECK(t.size() == 20);
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(t.compose(i, t.inverse(i)) == *t.find(AffineMap::identity(1, FieldTable::get(5))));
        CHECK(t.element(t.compose(i, i)) == compose(t.element(i), t.element(i)));
    }
}

TEST_CASE("guards")
{
    CHECK_THROWS_AS(GroupElementTable(3, PrimePower(4)), std::invalid_argument);
    CHECK_THROWS_AS(burnside_full(5, PrimePower(2)), std::invalid_argument);
}
