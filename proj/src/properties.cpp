#include "spn/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "spn/combinatorics.hpp"
#include "spn/tensor.hpp"

namespace spn {

namespace {

constexpr std::size_t kKeptViolations = 8;

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void record(PropertyReport& rep, std::string msg)
{
    ++rep.violation_count;
    if (rep.violations.size() < kKeptViolations)
        rep.violations.push_back(std::move(msg));
}

class BasisCache {
public:
    const std::vector<Monomial>& get(int n, int g)
    {
        auto it = cache_.find({n, g});
        if (it == cache_.end())
            it = cache_.emplace(std::make_pair(n, g), enumerate_basis(RingContext(n, g))).first;
        return it->second;
    }

private:
    std::map<std::pair<int, int>, std::vector<Monomial>> cache_;
};

std::vector<Monomial> random_basis_tensor(Rng& rng, BasisCache& bases, int n, int g, int k)
{
    const auto& basis = bases.get(n, g);
    std::vector<Monomial> slots(static_cast<std::size_t>(k));
    for (auto& s : slots)
        s = basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))];
    return slots;
}

int slot_capacity(std::span<const Monomial> slots, const RingContext& ctx)
{
    int c = 0;
    for (const auto& s : slots)
        c += capacity(s, ctx);
    return c;
}

std::string slots_string(std::span<const Monomial> slots)
{
    std::string out;
    for (const auto& s : slots) {
        if (!out.empty())
            out += " (x) ";
        out += to_string(s);
    }
    return out;
}

}  // namespace

PropertyReport check_power_capacity(std::uint64_t seed, std::size_t samples)
{
    PropertyReport rep{"power capacity bound", 0, {}, 0};
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const int n = uniform(rng, 1, 6);
        const int g = uniform(rng, 1, 5);
        const int k = uniform(rng, 2, 4);
        const RingContext ctx(n, g);
        std::vector<Monomial> slots(static_cast<std::size_t>(k));
        int p_sum = 0;
        for (auto& m : slots) {
            const int p = uniform(rng, 0, 2 * n);
            p_sum += p;
            m = Monomial{2 * n - p, 0};
        }
        const int a = p_sum + uniform(rng, 0, 3);
        const int c = slot_capacity(slots, ctx);
        ++rep.instances;
        if (c > a / 2)
            record(rep, fmt::format("n={} k={}: c({}) = {} > floor({}/2)", n, k, slots_string(slots), c, a));
    }
    return rep;
}

PropertyReport check_fresh_generator_capacity(std::uint64_t seed, std::size_t samples)
{
    PropertyReport rep{"fresh generator capacity drop", 0, {}, 0};
    Rng rng(seed);
    BasisCache bases;
    for (std::size_t s = 0; s < samples; ++s) {
        const int n = uniform(rng, 1, 6);
        const int g = uniform(rng, 1, 4);
        const int g2 = uniform(rng, g + 1, 5);
        const int k = uniform(rng, 2, 4);
        const RingContext big(n, g2);

        std::vector<Monomial> b = random_basis_tensor(rng, bases, n, g, k);
        const int c0 = slot_capacity(b, big);

        // Distinct (slot, fresh index) pairs.
        std::vector<std::pair<int, int>> pool;
        for (int e = 1; e <= k; ++e)
            for (int i = g + 1; i <= g2; ++i)
                pool.emplace_back(e, i);
        std::shuffle(pool.begin(), pool.end(), rng);
        const int j = uniform(rng, 0, static_cast<int>(pool.size()));

        std::vector<Monomial> prod = b;
        bool alive = true;
        for (int t = 0; t < j && alive; ++t) {
            auto [e, i] = pool[static_cast<std::size_t>(t)];
            auto m = monomial_mul(prod[static_cast<std::size_t>(e - 1)], generator(i, big), big);
            if (!m)
                alive = false;
            else
                prod[static_cast<std::size_t>(e - 1)] = *m;
        }
        ++rep.instances;
        if (alive) {
            const int c1 = slot_capacity(prod, big);
            if (c1 > c0 - j)
                record(rep, fmt::format("n={} g={}->{} k={} j={}: c = {} > {} - {} for b = {}", n, g, g2, k, j, c1, c0, j,
                                        slots_string(b)));
        }
        if (c0 < j && alive)
            record(rep, fmt::format("n={} g={}->{} k={} j={}: product survives with c(b) = {}", n, g, g2, k, j, c0));
    }
    return rep;
}

PropertyReport check_fresh_zero_divisor_capacity(std::uint64_t seed, std::size_t samples)
{
    PropertyReport rep{"fresh zero-divisor capacity drop", 0, {}, 0};
    Rng rng(seed);
    BasisCache bases;
    for (std::size_t s = 0; s < samples; ++s) {
        const int n = uniform(rng, 1, 6);
        const int g = uniform(rng, 1, 4);
        const int k = uniform(rng, 2, 4);
        const TensorContext tctx(RingContext(n, g + 1), k);

        std::vector<Monomial> b = random_basis_tensor(rng, bases, n, g, k);
        const int c0 = slot_capacity(b, tctx.ring());
        TensorClass p({tctx.pack(b)});
        int eps_sum = 0;
        for (int r = 2; r <= k; ++r) {
            if (uniform(rng, 0, 1) == 1) {
                ++eps_sum;
                p = tensor_mul(p, zero_divisor(r, g + 1, tctx), tctx);
            }
        }
        const int need = (1 + eps_sum) / 2;
        ++rep.instances;
        for (const auto& alpha : p.terms()) {
            const int c = tensor_capacity(alpha, tctx);
            if (c > c0 - need) {
                record(rep, fmt::format("n={} g={} k={} eps={}: term {} has c = {} > {} - {}", n, g, k, eps_sum,
                                        to_string(alpha, tctx), c, c0, need));
                break;
            }
        }
        if (c0 < need && !p.empty())
            record(rep, fmt::format("n={} g={} k={} eps={}: product survives with c(b) = {}", n, g, k, eps_sum, c0));
    }
    return rep;
}

PropertyReport check_capacity_meaning(std::uint64_t seed, std::size_t samples)
{
    PropertyReport rep{"capacity counts absorbable generators", 0, {}, 0};
    Rng rng(seed);
    BasisCache bases;
    for (std::size_t s = 0; s < samples; ++s) {
        const int n = uniform(rng, 1, 6);
        const int g = uniform(rng, 2, 8);
        const int gm = uniform(rng, 1, g - 1);
        const RingContext ctx(n, g);
        const auto& basis = bases.get(n, gm);
        const Monomial m = basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))];
        const int j = uniform(rng, 0, g - gm);
        MonomialOrZero prod = m;
        for (int i = gm + 1; i <= gm + j && prod; ++i)
            prod = monomial_mul(*prod, generator(i, ctx), ctx);
        ++rep.instances;
        if (prod.has_value() != (j <= capacity(m, ctx)))
            record(rep, fmt::format("n={} m={} j={}: capacity {} but product {}", n, to_string(m), j, capacity(m, ctx),
                                    prod ? "survives" : "vanishes"));
    }
    return rep;
}

std::vector<MidWindowInstance> mid_window_instances(int n_max, int g_max, int k_max)
{
    std::vector<MidWindowInstance> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 4; k <= k_max; k += 2) {
            const auto gp = static_cast<int>(gap_p2n(n, k));
            if (gp < 1)
                continue;
            const int h = (gp + 1) / 2;
            const int lambda = k / 2;
            for (int g = 2; g <= g_max; ++g) {
                if (!((g - 1) * (lambda - 1) < h && h <= (g - 1) * lambda))
                    continue;
                if ((k - 1) * (g - 1) > 18)
                    continue;
                out.push_back(MidWindowInstance{n, g, k, gp});
            }
        }
    }
    return out;
}

PropertyReport check_mid_window_vanishing(std::uint64_t seed, std::size_t samples)
{
    PropertyReport rep{"mid-window vanishing", 0, {}, 0};
    const std::vector<MidWindowInstance> inst = mid_window_instances(16, 6, 8);
    if (inst.empty()) {
        record(rep, "no instances in the middle genus window");
        return rep;
    }
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const MidWindowInstance& w = inst[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(inst.size()) - 1))];
        const int n = w.n, g = w.g, k = w.k;
        const int h = (w.gap_p2n + 1) / 2;
        const int t = h - (g - 1) * (k / 2 - 1);
        const int cells = (k - 1) * (g - 1);

        const int d_max = std::min(cells - w.gap_p2n + t - 1, 2 * n * k - w.gap_p2n);
        const int d = uniform(rng, 0, d_max);
        const int deg_e = uniform(rng, w.gap_p2n + d - t + 1, cells);

        // m = x^{2n-p_1} (x) ... (x) x^{2n-p_k} with sum p = gap + d.
        std::vector<int> p(static_cast<std::size_t>(k), 0);
        for (int left = w.gap_p2n + d; left > 0;) {
            auto& slot = p[static_cast<std::size_t>(uniform(rng, 0, k - 1))];
            if (slot < 2 * n) {
                ++slot;
                --left;
            }
        }
        const TensorContext tctx(RingContext(n, g), k);
        std::vector<Monomial> m(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r)
            m[static_cast<std::size_t>(r)] = Monomial{2 * n - p[static_cast<std::size_t>(r)], 0};

        std::vector<int> delta(static_cast<std::size_t>(cells), 0);
        std::fill(delta.begin(), delta.begin() + deg_e, 1);
        std::shuffle(delta.begin(), delta.end(), rng);

        TensorClass prod({tctx.pack(m)});
        for (int r = 2; r <= k && !prod.empty(); ++r)
            for (int i = 2; i <= g && !prod.empty(); ++i)
                if (delta[static_cast<std::size_t>((r - 2) * (g - 1) + (i - 2))])
                    prod = tensor_mul(prod, zero_divisor(r, i, tctx), tctx);
        ++rep.instances;
        if (!prod.empty())
            record(rep, fmt::format("n={} g={} k={} d={} deg(e)={}: m = {} survives with {} terms", n, g, k, d, deg_e,
                                    slots_string(m), prod.size()));
    }
    return rep;
}

std::vector<SquareCheck> squared_zero_divisors(int n_max, int g_max)
{
    std::vector<SquareCheck> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int g = 1; g <= g_max; ++g) {
            const TensorContext tctx(RingContext(n, g), 2);
            TensorClass acc = unit_class(tctx);
            for (int j = 1; j <= g; ++j) {
                acc = tensor_mul(acc, zd_power(2, j, 2, tctx), tctx);
                out.push_back(SquareCheck{n, g, j, acc.empty()});
            }
        }
    }
    return out;
}

}  // namespace spn
