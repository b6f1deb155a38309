#include "spn/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <fmt/format.h>

namespace spn {

namespace {

// 2^{i+1} <= 4n stays far inside 64 bits for every n accepted here.
constexpr std::int64_t kMaxN = std::int64_t{1} << 40;

void require_positive(std::int64_t m, const char* what)
{
    if (m < 1)
        throw std::invalid_argument(fmt::format("{} must be positive, got {}", what, m));
}

}  // namespace

int top_bit(std::int64_t m)
{
    require_positive(m, "m");
    return std::bit_width(static_cast<std::uint64_t>(m)) - 1;
}

bool is_power_of_two(std::int64_t m) noexcept
{
    return m > 0 && std::has_single_bit(static_cast<std::uint64_t>(m));
}

BinaryProfile binary_profile(std::int64_t m)
{
    BinaryProfile p;
    p.m = m;
    p.e = top_bit(m);
    p.digits.resize(static_cast<std::size_t>(p.e) + 1);
    for (int j = 0; j <= p.e; ++j)
        p.digits[j] = static_cast<int>((m >> j) & 1);
    return p;
}

std::vector<int> s_set(std::int64_t m)
{
    const BinaryProfile p = binary_profile(m);
    auto digit = [&](int j) { return (j < 0 || j > p.e) ? 0 : p.digits[j]; };
    std::vector<int> out;
    for (int i = 0; i <= p.e; ++i)
        if (digit(i) == 1 && digit(i - 1) == 1 && digit(i + 1) == 0)
            out.push_back(i);
    return out;
}

std::int64_t z_value(std::int64_t m, int i)
{
    const int e = top_bit(m);
    if (i < 0 || i > e)
        throw std::out_of_range(fmt::format("index {} outside [0, {}] for m = {}", i, e, m));
    std::int64_t z = 0;
    for (int j = 0; j <= i; ++j)
        if (((m >> j) & 1) == 0)
            z += std::int64_t{1} << j;
    return z;
}

std::int64_t gap_p2n_run_formula(std::int64_t n, int k)
{
    require_positive(n, "n");
    if (n > kMaxN)
        throw std::invalid_argument("n too large for 64-bit gap arithmetic");
    if (k < 2)
        throw std::invalid_argument(fmt::format("k must be at least 2, got {}", k));
    std::int64_t best = 0;
    for (int i : s_set(2 * n))
        best = std::max(best, (std::int64_t{1} << (i + 1)) - 1 - k * z_value(2 * n, i));
    return best;
}

std::int64_t gap_p2n(std::int64_t n, int k)
{
    if (k < 2)
        throw std::invalid_argument(fmt::format("k must be at least 2, got {}", k));
    if (k == 2) {
        require_positive(n, "n");
        return 4 * n - (std::int64_t{1} << (top_bit(n) + 2)) + 1;
    }
    return gap_p2n_run_formula(n, k);
}

int binom_parity(std::uint64_t m, std::uint64_t j) noexcept
{
    return (j & ~m) == 0 ? 1 : 0;
}

int longest_one_run(std::int64_t m)
{
    require_positive(m, "m");
    int best = 0;
    int run = 0;
    for (auto v = static_cast<std::uint64_t>(m); v != 0; v >>= 1) {
        run = (v & 1U) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

}  // namespace spn
