#include <doctest.h>

#include <random>
#include <stdexcept>
#include <thread>

#include "spn/tensor.hpp"

using namespace spn;

namespace {

Monomial mono(int a, std::initializer_list<int> gens = {})
{
    Monomial m{a, 0};
    for (int i : gens)
        m.idx |= std::uint64_t{1} << (i - 2);
    return m;
}

TensorMonomial tmono(const TensorContext& t, std::vector<Monomial> slots)
{
    return t.pack(slots);
}

TensorClass cls(const TensorContext& t, std::vector<std::vector<Monomial>> terms)
{
    std::vector<TensorMonomial> raw;
    for (auto& s : terms)
        raw.push_back(t.pack(s));
    return TensorClass(raw);
}

}  // namespace

TEST_CASE("context and packing")
{
    CHECK_THROWS_AS(TensorContext(RingContext(1, 1), 1), std::invalid_argument);
    const TensorContext t(RingContext(3, 4), 3);
    const std::vector<Monomial> slots{mono(5, {3}), mono(0), mono(2, {2, 4})};
    const auto p = t.pack(slots);
    CHECK(t.unpack(p) == slots);
    CHECK(t.slot(p, 1) == slots[0]);
    CHECK(t.slot(p, 3) == slots[2]);
    CHECK(t.degree(p) == 6 + 0 + 4);

    // Packed order is lexicographic in the slots.
    CHECK(tmono(t, {mono(1), mono(6), mono(6)}) < tmono(t, {mono(2), mono(0), mono(0)}));
    CHECK(tmono(t, {mono(2), mono(0, {4}), mono(0)}) < tmono(t, {mono(2), mono(1), mono(0)}));
}

TEST_CASE("zero_divisor")
{
    const TensorContext t2(RingContext(1, 1), 2);
    CHECK(zero_divisor(2, 1, t2) == cls(t2, {{mono(1), mono(0)}, {mono(0), mono(1)}}));

    const TensorContext t3(RingContext(1, 2), 3);
    CHECK(zero_divisor(3, 2, t3) == cls(t3, {{mono(0, {2}), mono(0), mono(0)}, {mono(0), mono(0), mono(0, {2})}}));

    CHECK_THROWS_AS(zero_divisor(1, 1, t3), std::out_of_range);
    CHECK_THROWS_AS(zero_divisor(4, 1, t3), std::out_of_range);
    CHECK_THROWS_AS(zero_divisor(2, 3, t3), std::out_of_range);

    SUBCASE("lies in the kernel of the cup product")
    {
        for (int n = 1; n <= 3; ++n)
            for (int g = 1; g <= 3; ++g)
                for (int k = 2; k <= 4; ++k) {
                    const TensorContext t(RingContext(n, g), k);
                    for (int r = 2; r <= k; ++r)
                        for (int i = 1; i <= g; ++i)
                            CHECK(total_multiplication(zero_divisor(r, i, t), t).empty());
                }
    }
}

TEST_CASE("tensor_mul")
{
    const TensorContext t(RingContext(1, 1), 2);
    const TensorClass z = zero_divisor(2, 1, t);
    const TensorClass sq = tensor_mul(z, z, t);
    CHECK(sq == cls(t, {{mono(2), mono(0)}, {mono(0), mono(2)}}));
    const TensorClass cube = tensor_mul(sq, z, t);
    CHECK(cube == cls(t, {{mono(2), mono(1)}, {mono(1), mono(2)}}));
    CHECK(tensor_mul(z, TensorClass{}, t).empty());
    CHECK(tensor_mul(unit_class(t), z, t) == z);
}

TEST_CASE("zd_power")
{
    const TensorContext t(RingContext(1, 1), 2);
    CHECK(zd_power(2, 1, 0, t) == unit_class(t));
    CHECK(zd_power(2, 1, 3, t) == cls(t, {{mono(2), mono(1)}, {mono(1), mono(2)}}));
    CHECK(zd_power(2, 1, 4, t).empty());
    CHECK_THROWS_AS(zd_power(2, 1, -1, t), std::invalid_argument);

    SUBCASE("matches repeated multiplication")
    {
        for (int n = 1; n <= 3; ++n)
            for (int g = 1; g <= 3; ++g)
                for (int k = 2; k <= 3; ++k) {
                    const TensorContext c(RingContext(n, g), k);
                    for (int r = 2; r <= k; ++r)
                        for (int i = 1; i <= g; ++i)
                            for (int m = 0; m <= 12; ++m)
                                CHECK(zd_power(r, i, m, c) == zd_power_naive(r, i, m, c));
                }
    }
}

TEST_CASE("zd_product")
{
    SUBCASE("P^2 witness")
    {
        const TensorContext t(RingContext(1, 1), 2);
        ZdExponents e(2, 1);
        e.at(2, 1) = 3;
        const TensorClass p = zd_product(e, t);
        CHECK_FALSE(p.empty());
        CHECK(contains(p, tmono(t, {mono(2), mono(1)})));
    }
    SUBCASE("N_2 witness of degree three")
    {
        const TensorContext t(RingContext(1, 2), 2);
        ZdExponents e(2, 2);
        e.at(2, 1) = 2;
        e.at(2, 2) = 1;
        CHECK_FALSE(zd_product(e, t).empty());
        CHECK(e.total() == 3);
    }
    SUBCASE("a single factor of exponent eight dies for n = g = 2")
    {
        const TensorContext t(RingContext(2, 2), 2);
        ZdExponents e(2, 2);
        e.at(2, 1) = 8;
        CHECK(zd_product(e, t).empty());
    }
    SUBCASE("cache does not change results")
    {
        const TensorContext t(RingContext(2, 3), 3);
        PowerCache cache;
        std::mt19937 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            ZdExponents e(3, 3);
            for (int r = 2; r <= 3; ++r)
                for (int i = 1; i <= 3; ++i)
                    e.at(r, i) = std::uniform_int_distribution<int>(0, 3)(rng);
            CHECK(zd_product(e, t, &cache) == zd_product(e, t));
        }
        CHECK(cache.size() > 0);
    }
}

TEST_CASE("tensor_capacity and contains")
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 2; k <= 4; ++k) {
            const TensorContext t(RingContext(n, 2), k);
            CHECK(tensor_capacity(unit_class(t).terms().front(), t) == n * k);
            const std::vector<Monomial> top(static_cast<std::size_t>(k), mono(2 * n));
            CHECK(tensor_capacity(t.pack(top), t) == 0);
        }
    const TensorContext t(RingContext(3, 2), 2);
    CHECK(tensor_capacity(tmono(t, {mono(4), mono(3, {2})}), t) == 1);

    const TensorContext p2(RingContext(1, 1), 2);
    CHECK_FALSE(contains(TensorClass{}, tmono(p2, {mono(0), mono(0)})));
    const TensorClass one = cls(p2, {{mono(1), mono(0)}});
    CHECK(contains(one, tmono(p2, {mono(1), mono(0)})));
    CHECK(contains(zd_power(2, 1, 3, p2), tmono(p2, {mono(2), mono(1)})));
}

TEST_CASE("products never exceed the top degree of a slot")
{
    const TensorContext t(RingContext(2, 2), 3);
    for (int m = 0; m <= 10; ++m) {
        const TensorClass p = zd_power(3, 2, m, t);
        for (const auto& term : p.terms())
            for (const auto& s : t.unpack(term)) {
                CHECK(s.degree() <= 4);
                CHECK(in_normal_form(s, t.ring()));
            }
    }
}

TEST_CASE("relabelling generators and slots preserves vanishing")
{
    const TensorContext t(RingContext(2, 3), 3);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        ZdExponents e(3, 3);
        for (int r = 2; r <= 3; ++r)
            for (int i = 1; i <= 3; ++i)
                e.at(r, i) = std::uniform_int_distribution<int>(0, 3)(rng);
        ZdExponents slots_swapped(3, 3);
        ZdExponents gens_swapped(3, 3);
        for (int i = 1; i <= 3; ++i) {
            slots_swapped.at(2, i) = e.at(3, i);
            slots_swapped.at(3, i) = e.at(2, i);
        }
        for (int r = 2; r <= 3; ++r) {
            gens_swapped.at(r, 1) = e.at(r, 1);
            gens_swapped.at(r, 2) = e.at(r, 3);
            gens_swapped.at(r, 3) = e.at(r, 2);
        }
        const bool base = zd_product(e, t).empty();
        CHECK(zd_product(slots_swapped, t).empty() == base);
        CHECK(zd_product(gens_swapped, t).empty() == base);
    }
}

TEST_CASE("PowerCache under concurrent use")
{
    const TensorContext t(RingContext(3, 3), 3);
    PowerCache cache;
    std::vector<std::jthread> workers;
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([&] {
            for (int m = 0; m <= 8; ++m) {
                ZdExponents e(3, 3);
                e.at(2, 1) = m;
                e.at(3, 2) = 8 - m;
                (void)zd_product(e, t, &cache);
            }
        });
    workers.clear();
    for (int m = 1; m <= 8; ++m) {
        auto hit = cache.find(2, 1, m);
        REQUIRE(hit);
        CHECK(*hit == zd_power(2, 1, m, t));
    }
}

TEST_CASE("to_string")
{
    const TensorContext t(RingContext(1, 1), 2);
    CHECK(to_string(tmono(t, {mono(2), mono(1)}), t) == "x1^2 ⊗ x1");
    CHECK(to_string(tmono(t, {mono(0), mono(0)}), t) == "1 ⊗ 1");
}
