#include <doctest.h>

#include "spn/properties.hpp"

using namespace spn;

namespace {

void expect_clean(const PropertyReport& r, std::size_t samples)
{
    INFO(r.name);
    CHECK(r.instances == samples);
    CHECK(r.violation_count == 0);
    for (const auto& v : r.violations)
        MESSAGE(v);
}

}  // namespace

TEST_CASE("capacity of top-heavy powers")
{
    expect_clean(check_power_capacity(7, 2000), 2000);
}

TEST_CASE("fresh generators")
{
    expect_clean(check_fresh_generator_capacity(7, 2000), 2000);
}

TEST_CASE("fresh zero divisors")
{
    expect_clean(check_fresh_zero_divisor_capacity(7, 2000), 2000);
}

TEST_CASE("capacity counts absorbable generators")
{
    expect_clean(check_capacity_meaning(7, 2000), 2000);
}

TEST_CASE("seeds give reproducible reports")
{
    const auto a = check_power_capacity(42, 300);
    const auto b = check_power_capacity(42, 300);
    CHECK(a.instances == b.instances);
    CHECK(a.violation_count == b.violation_count);
}

TEST_CASE("middle window")
{
    const auto inst = mid_window_instances(16, 6, 8);
    CHECK(inst.size() == 15);
    for (const auto& i : inst) {
        CHECK(i.k % 2 == 0);
        CHECK(i.k >= 4);
        CHECK(i.gap_p2n % 2 == 1);
    }
    expect_clean(check_mid_window_vanishing(7, 200), 200);
}

TEST_CASE("squared zero divisors")
{
    const auto all = squared_zero_divisors(4, 4);
    CHECK_FALSE(all.empty());
    for (const auto& s : all) {
        INFO("n=" << s.n << " g=" << s.g << " j=" << s.j);
        if (s.n >= 2 && s.j <= std::min(s.g, s.n))
            CHECK_FALSE(s.vanishes);
        if (s.n == 1)
            CHECK(s.vanishes == (s.j >= 2));
    }
}
