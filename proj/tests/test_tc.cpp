#include <doctest.h>

#include <stdexcept>

#include "spn/combinatorics.hpp"
#include "spn/tc.hpp"

using namespace spn;

TEST_CASE("tc_bounds examples")
{
    const auto a = tc_bounds(2, 5, 2);
    REQUIRE(a.tc_exact);
    CHECK(*a.tc_exact == 7);
    CHECK_FALSE(a.justification.empty());

    const auto b = tc_bounds(51, 20, 5);
    REQUIRE(b.tc_exact);
    CHECK(*b.tc_exact == 510);

    const auto c = tc_bounds(1, 2, 2);
    CHECK(c.tc_lower == 3);
    CHECK(c.tc_upper == 4);
    CHECK_FALSE(c.tc_exact);
    CHECK(c.justification.empty());
    const auto notes = annotations(1, 2, 2);
    REQUIRE_FALSE(notes.empty());
    CHECK(notes.front().value == 4);

    CHECK_THROWS_AS(tc_bounds(1, 1, 1), std::invalid_argument);
}

TEST_CASE("bound chains and exactness rules")
{
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t g = 1; g <= 20; ++g)
            for (int k = 2; k <= 7; ++k) {
                const auto r = tc_bounds(n, g, k);
                CHECK(r.zcl.value <= r.cat_cof_lower);
                CHECK(r.cat_cof_lower <= r.cat_cof_upper);
                CHECK(r.zcl.value <= r.tc_lower);
                CHECK(r.tc_lower <= r.tc_upper);
                CHECK(r.tc_upper <= 2 * n * k);
                CHECK(r.tc_lower >= 2 * n * (k - 1));
                if (r.tc_exact) {
                    CHECK(r.tc_lower == r.tc_upper);
                    CHECK(*r.tc_exact == r.tc_lower);
                    CHECK(exact_rule_holds(r.justification, n, g, k));
                }
                if (r.cat_cof_exact)
                    CHECK(r.cat_cof_lower == r.cat_cof_upper);
            }
}

TEST_CASE("annotations never change the computed bounds")
{
    const auto p2 = tc_bounds(1, 1, 2);
    CHECK(p2.tc_lower == 3);
    CHECK_FALSE(annotations(1, 1, 2).empty());
    CHECK(annotations(51, 3, 4).empty());
}

TEST_CASE("davis saturation")
{
    for (std::int64_t n = 1; n <= 300; ++n)
        for (int k = 2; k <= 20; ++k)
            if (davis_saturated(n, k))
                CHECK(gap_p2n(n, k) == 0);
}

TEST_CASE("interval arithmetic")
{
    const Interval a{3, 4};
    const Interval b{-1, 2};
    CHECK(a + b == Interval{2, 6});
    CHECK(-2 * a == Interval{-8, -6});
    CHECK(Interval{5, 5}.exact());
}

TEST_CASE("tcgen_polynomial")
{
    const auto p = tcgen_polynomial(2, 1);
    CHECK(p.exact);
    CHECK(to_string(p) == "7t − 2t² − t³");
    CHECK(p.value_at_one() == 4);
    CHECK(p.degree() == 3);

    for (std::int64_t n : {2, 4})
        for (std::int64_t g = 1; g <= 3; ++g) {
            const auto q = tcgen_polynomial(n, g);
            REQUIRE(q.exact);
            CHECK(q.value_at_one() == 2 * n);
            CHECK(q.degree() <= 3);
            const auto s = series_coefficients(q, 11);
            for (int k = 1; k <= 10; ++k) {
                const auto r = tc_bounds(n, g, k + 1);
                REQUIRE(r.tc_exact);
                CHECK(s[k] == *r.tc_exact);
            }
        }

    CHECK_THROWS_AS(tcgen_polynomial(3, 1), std::invalid_argument);

    const auto one = tcgen_polynomial(1, 2);
    CHECK_FALSE(one.exact);
    CHECK(one.value_at_one() == 2);
    CHECK_THROWS(series_coefficients(one, 5));
}

TEST_CASE("generating polynomial away from powers of two")
{
    for (std::int64_t n : {3, 5, 6, 51})
        for (std::int64_t g = 2; g <= 45; ++g) {
            const auto p = tcgen_polynomial(n, g);
            CHECK(p.value_at_one() == 2 * n);
            if (in_tail_regime(n, g))
                CHECK(p.stabilization_index == 3);
            REQUIRE_FALSE(p.tc_values.empty());
            CHECK_FALSE(p.tc_values.front().exact());
            CHECK_FALSE(p.exact);
            for (std::size_t j = 0; j < p.tc_values.size(); ++j) {
                const auto r = tc_bounds(n, g, static_cast<int>(j) + 2);
                CHECK(p.tc_values[j] == Interval{r.tc_lower, r.tc_upper});
            }
        }
}

TEST_CASE("arithmetic tail")
{
    CHECK(in_tail_regime(51, 40));
    CHECK_FALSE(in_tail_regime(51, 39));
    CHECK(arithmetic_tail_check(51, 40));
    for (std::int64_t n : {2, 4, 8})
        for (std::int64_t g = 2; g <= 5; ++g)
            CHECK(arithmetic_tail_check(n, g));
    CHECK_THROWS_AS(arithmetic_tail_check(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_tail_check(51, 10), std::invalid_argument);
}
