#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "spn/ring.hpp"

using namespace spn;

namespace {

Monomial mono(int a, std::initializer_list<int> gens = {})
{
    Monomial m{a, 0};
    for (int i : gens)
        m.idx |= std::uint64_t{1} << (i - 2);
    return m;
}

// Every raw exponent vector of total degree d with entries <= bound, reduced.
std::set<Monomial> reduce_all(const RingContext& ctx, int d, int bound)
{
    std::set<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(ctx.g()), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == ctx.g() - 1) {
            if (left > bound)
                return;
            e[pos] = left;
            if (auto m = normalize(e, ctx))
                out.insert(*m);
            return;
        }
        for (int v = 0; v <= std::min(left, bound); ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

CohClass random_class(std::mt19937& rng, const RingContext& ctx, const std::vector<Monomial>& basis)
{
    std::vector<Monomial> terms;
    const int count = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int t = 0; t < count; ++t)
        terms.push_back(basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)]);
    (void)ctx;
    return CohClass(terms);
}

}  // namespace

TEST_CASE("context rejects non-positive parameters")
{
    CHECK_THROWS_AS(RingContext(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(RingContext(1, 0), std::invalid_argument);
    CHECK(RingContext(3, 2).dimension() == 6);
}

TEST_CASE("normalize")
{
    SUBCASE("x2^2 is y on N_2")
    {
        const RingContext ctx(1, 2);
        const std::vector<int> raw{0, 2};
        CHECK(normalize(raw, ctx) == mono(2));
    }
    SUBCASE("x2 x3 vanishes for n = 1")
    {
        const RingContext ctx(1, 3);
        const std::vector<int> raw{0, 1, 1};
        CHECK_FALSE(normalize(raw, ctx).has_value());
    }
    SUBCASE("(x1 x2)^2 = y^2 survives for n = 2")
    {
        const RingContext ctx(2, 2);
        const std::vector<int> raw{2, 2};
        CHECK(normalize(raw, ctx) == mono(4));
    }
    SUBCASE("odd exponents keep one copy of the generator")
    {
        const RingContext ctx(4, 3);
        const std::vector<int> raw{1, 3, 2};
        CHECK(normalize(raw, ctx) == mono(5, {2}));
    }
    SUBCASE("length mismatch and negative entries")
    {
        const RingContext ctx(2, 2);
        const std::vector<int> short_raw{1};
        const std::vector<int> negative{1, -1};
        CHECK_THROWS_AS(normalize(short_raw, ctx), std::invalid_argument);
        CHECK_THROWS_AS(normalize(negative, ctx), std::invalid_argument);
    }
}

TEST_CASE("monomial_mul")
{
    const RingContext one(1, 1);
    CHECK(monomial_mul(mono(1), mono(1), one) == mono(2));
    CHECK_FALSE(monomial_mul(mono(1), mono(2), one).has_value());

    const RingContext two(2, 2);
    CHECK(monomial_mul(mono(1, {2}), mono(1, {2}), two) == mono(4));

    SUBCASE("agrees with normalizing the concatenated exponents")
    {
        const RingContext ctx(3, 3);
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                for (int c = 0; c <= 2; ++c)
                    for (int d = 0; d <= 2; ++d) {
                        const std::vector<int> u{a, c, 0};
                        const std::vector<int> v{b, d, 1};
                        const std::vector<int> uv{a + b, c + d, 1};
                        auto nu = normalize(u, ctx);
                        auto nv = normalize(v, ctx);
                        if (!nu || !nv)
                            continue;
                        CHECK(monomial_mul(*nu, *nv, ctx) == normalize(uv, ctx));
                    }
    }
}

TEST_CASE("class arithmetic")
{
    const RingContext p2(1, 1);
    const CohClass x = CohClass::of(mono(1));
    const CohClass y = CohClass::of(mono(2));

    CHECK((x + x).empty());
    CHECK(class_mul(x + y, x, p2) == y);

    const RingContext ctx(2, 3);
    const CohClass s = CohClass::of(mono(0, {2})) + CohClass::of(mono(0, {3}));
    CHECK(class_mul(s, s, ctx).empty());

    CHECK(CohClass(std::vector<Monomial>{mono(1), mono(1), mono(1)}) == x);
    CHECK_FALSE((x + y).is_homogeneous());
    CHECK(CohClass::of(std::nullopt).empty());
}

TEST_CASE("capacity")
{
    for (int n = 1; n <= 4; ++n) {
        const RingContext ctx(n, 2);
        CHECK(capacity(mono(0), ctx) == n);
        CHECK(capacity(mono(2 * n), ctx) == 0);
    }
    CHECK(capacity(mono(3, {2}), RingContext(3, 2)) == 0);
    CHECK(capacity(std::nullopt, RingContext(3, 2)) == kMinusInfinity);
}

TEST_CASE("enumerate_basis")
{
    SUBCASE("P^2")
    {
        const RingContext ctx(1, 1);
        const auto b = enumerate_basis(ctx);
        CHECK(b == std::vector<Monomial>{mono(0), mono(1), mono(2)});
    }
    SUBCASE("degree one on N_2")
    {
        CHECK(enumerate_basis(RingContext(1, 2), 1) == std::vector<Monomial>{mono(0, {2}), mono(1)});
    }
    SUBCASE("top degree is one-dimensional")
    {
        // x1^3 x2 has weight 3 > 2, so only x1^4 remains in degree 4.
        CHECK(enumerate_basis(RingContext(2, 2), 4) == std::vector<Monomial>{mono(4)});
        for (int n = 1; n <= 4; ++n)
            for (int g = 1; g <= 4; ++g)
                CHECK(enumerate_basis(RingContext(n, g), 2 * n) == std::vector<Monomial>{mono(2 * n)});
    }
    SUBCASE("matches reduction of all raw monomials")
    {
        for (int n = 1; n <= 3; ++n)
            for (int g = 1; g <= 3; ++g) {
                const RingContext ctx(n, g);
                for (int d = 0; d <= 2 * n + 1; ++d) {
                    const auto b = enumerate_basis(ctx, d);
                    const std::set<Monomial> expect = reduce_all(ctx, d, 2 * n + 2);
                    CHECK(std::set<Monomial>(b.begin(), b.end()) == expect);
                    CHECK(std::is_sorted(b.begin(), b.end()));
                }
            }
    }
    SUBCASE("every basis element is in normal form")
    {
        const RingContext ctx(4, 5);
        for (const auto& m : enumerate_basis(ctx)) {
            CHECK(in_normal_form(m, ctx));
            CHECK(m.degree() <= 2 * ctx.n());
            CHECK(capacity(m, ctx) >= 0);
        }
    }
}

TEST_CASE("ring laws on random classes")
{
    std::mt19937 rng(11);
    for (int n = 1; n <= 4; ++n) {
        for (int g = 1; g <= 4; ++g) {
            const RingContext ctx(n, g);
            const auto basis = enumerate_basis(ctx);
            for (int t = 0; t < 40; ++t) {
                const CohClass p = random_class(rng, ctx, basis);
                const CohClass q = random_class(rng, ctx, basis);
                const CohClass r = random_class(rng, ctx, basis);
                CHECK(class_mul(p, q, ctx) == class_mul(q, p, ctx));
                CHECK(class_mul(class_mul(p, q, ctx), r, ctx) == class_mul(p, class_mul(q, r, ctx), ctx));
                CHECK(class_mul(p + q, p + q, ctx) == class_mul(p, p, ctx) + class_mul(q, q, ctx));
                CHECK(class_mul(p, q + r, ctx) == class_mul(p, q, ctx) + class_mul(p, r, ctx));
            }
        }
    }
}

TEST_CASE("capacity counts the fresh generators a monomial absorbs")
{
    const int g = 8;
    for (int n = 1; n <= 4; ++n) {
        const RingContext ctx(n, g);
        for (int gm = 1; gm <= 3; ++gm) {
            for (const auto& m : enumerate_basis(RingContext(n, gm))) {
                MonomialOrZero prod = m;
                for (int j = 0; gm + j <= g; ++j) {
                    CHECK(prod.has_value() == (j <= capacity(m, ctx)));
                    if (prod && gm + j + 1 <= g)
                        prod = monomial_mul(*prod, generator(gm + j + 1, ctx), ctx);
                    else
                        prod.reset();
                }
            }
        }
    }
}
