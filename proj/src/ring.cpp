#include "spn/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace spn {

namespace {

// Sorts and drops pairs of equal entries (Z/2 coefficients).
template <class T>
void cancel_pairs(std::vector<T>& v)
{
    std::sort(v.begin(), v.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if ((j - i) % 2 == 1)
            v[out++] = v[i];
        i = j;
    }
    v.resize(out);
}

}  // namespace

RingContext::RingContext(int n, int g) : n_(n), g_(g)
{
    if (n < 1)
        throw std::invalid_argument(fmt::format("n must be positive, got {}", n));
    if (g < 1 || g > kMaxGenus)
        throw std::invalid_argument(fmt::format("g must lie in [1, {}], got {}", kMaxGenus, g));
}

bool in_normal_form(const Monomial& m, const RingContext& ctx) noexcept
{
    if (m.a < 0)
        return false;
    if ((m.idx >> (ctx.g() - 1)) != 0)
        return false;
    return m.weight() <= ctx.n();
}

MonomialOrZero normalize(std::span<const int> raw, const RingContext& ctx)
{
    if (static_cast<int>(raw.size()) != ctx.g())
        throw std::invalid_argument(
            fmt::format("exponent vector has length {}, expected g = {}", raw.size(), ctx.g()));
    Monomial m;
    for (int i = 1; i <= ctx.g(); ++i) {
        const int e = raw[i - 1];
        if (e < 0)
            throw std::invalid_argument(fmt::format("negative exponent {} on x_{}", e, i));
        if (i == 1) {
            m.a += e;
            continue;
        }
        m.a += 2 * (e / 2);
        if (e % 2 == 1)
            m.idx |= std::uint64_t{1} << (i - 2);
    }
    if (m.weight() > ctx.n())
        return std::nullopt;
    return m;
}

Monomial generator(int i, const RingContext& ctx)
{
    if (i < 1 || i > ctx.g())
        throw std::out_of_range(fmt::format("generator x_{} outside 1..{}", i, ctx.g()));
    if (i == 1)
        return Monomial{1, 0};
    return Monomial{0, std::uint64_t{1} << (i - 2)};
}

MonomialOrZero monomial_mul(const Monomial& u, const Monomial& v, const RingContext& ctx)
{
    // x_i * x_i = x_1^2 for every shared index.
    const std::uint64_t shared = u.idx & v.idx;
    Monomial m{u.a + v.a + 2 * std::popcount(shared), u.idx ^ v.idx};
    if (m.weight() > ctx.n())
        return std::nullopt;
    return m;
}

int capacity(const MonomialOrZero& m, const RingContext& ctx) noexcept
{
    if (!m)
        return kMinusInfinity;
    return ctx.n() - m->weight();
}

std::vector<Monomial> enumerate_basis(const RingContext& ctx, std::optional<int> degree)
{
    std::vector<Monomial> out;
    const int free_bits = ctx.g() - 1;
    const int max_set = std::min(free_bits, ctx.n());
    for (int a = 0; a <= ctx.dimension(); ++a) {
        const int room = ctx.n() - (a + 1) / 2;
        if (room < 0)
            break;
        if (degree && (a > *degree || a + std::min(room, max_set) < *degree))
            continue;
        // idx subsets in ascending binary order; only enumerable for modest g.
        if (free_bits > 30) {
            throw std::invalid_argument("basis enumeration needs g <= 31");
        }
        const std::uint64_t limit = std::uint64_t{1} << free_bits;
        for (std::uint64_t idx = 0; idx < limit; ++idx) {
            const int w = std::popcount(idx);
            if (w > room)
                continue;
            if (degree && a + w != *degree)
                continue;
            out.push_back(Monomial{a, idx});
        }
    }
    return out;
}

std::string to_string(const Monomial& m)
{
    std::string s;
    if (m.a == 1)
        s = "x1";
    else if (m.a > 1)
        s = fmt::format("x1^{}", m.a);
    for (int b = 0; b < 64; ++b) {
        if ((m.idx >> b) & 1U) {
            if (!s.empty())
                s += '*';
            s += fmt::format("x{}", b + 2);
        }
    }
    return s.empty() ? "1" : s;
}

CohClass::CohClass(std::vector<Monomial> terms) : terms_(std::move(terms))
{
    cancel_pairs(terms_);
}

CohClass CohClass::of(const MonomialOrZero& m)
{
    CohClass c;
    if (m)
        c.terms_.push_back(*m);
    return c;
}

bool CohClass::contains(const Monomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

bool CohClass::is_homogeneous() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Monomial& m) { return m.degree() == terms_.front().degree(); });
}

CohClass& CohClass::operator+=(const CohClass& other)
{
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

CohClass class_add(const CohClass& p, const CohClass& q)
{
    return p + q;
}

CohClass class_mul(const CohClass& p, const CohClass& q, const RingContext& ctx)
{
    std::vector<Monomial> raw;
    raw.reserve(p.size() * q.size());
    for (const auto& u : p.terms())
        for (const auto& v : q.terms())
            if (auto m = monomial_mul(u, v, ctx))
                raw.push_back(*m);
    return CohClass(std::move(raw));
}

std::string to_string(const CohClass& c)
{
    if (c.empty())
        return "0";
    std::string s;
    for (const auto& m : c.terms()) {
        if (!s.empty())
            s += " + ";
        s += to_string(m);
    }
    return s;
}

}  // namespace spn
