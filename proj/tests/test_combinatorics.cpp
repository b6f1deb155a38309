#include <doctest.h>

#include <algorithm>
#include <bitset>
#include <stdexcept>
#include <string>

#include "spn/combinatorics.hpp"

using namespace spn;

namespace {

// Reads runs straight off the printed binary string.
std::vector<int> runs_from_string(std::int64_t m)
{
    const std::string bits = std::bitset<40>(static_cast<unsigned long long>(m)).to_string();
    std::vector<int> out;
    auto digit = [&](int j) { return j < 0 || j >= 40 ? '0' : bits[39 - j]; };
    for (int i = 39; i >= 1; --i)
        if (digit(i) == '1' && digit(i - 1) == '1' && digit(i + 1) == '0')
            out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t binom_mod2_pascal(int m, int j)
{
    static std::vector<std::vector<std::uint8_t>> rows;
    if (rows.empty()) {
        rows.assign(257, std::vector<std::uint8_t>(257, 0));
        for (int a = 0; a <= 256; ++a) {
            rows[a][0] = 1;
            for (int b = 1; b <= a; ++b)
                rows[a][b] = static_cast<std::uint8_t>(rows[a - 1][b - 1] ^ (b <= a - 1 ? rows[a - 1][b] : 0));
        }
    }
    return rows[m][j];
}

}  // namespace

TEST_CASE("top_bit and powers of two")
{
    CHECK(top_bit(1) == 0);
    CHECK(top_bit(51) == 5);
    CHECK(top_bit(102) == 6);
    CHECK(is_power_of_two(64));
    CHECK_FALSE(is_power_of_two(51));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_THROWS_AS(top_bit(0), std::invalid_argument);
    const auto p = binary_profile(102);
    CHECK(p.e == 6);
    CHECK(p.digits == std::vector<int>{0, 1, 1, 0, 0, 1, 1});
}

TEST_CASE("s_set")
{
    CHECK(s_set(102) == std::vector<int>{2, 6});
    CHECK(s_set(2).empty());
    CHECK(s_set(3) == std::vector<int>{1});
    for (std::int64_t m = 1; m <= 4096; ++m)
        CHECK(s_set(m) == runs_from_string(m));
}

TEST_CASE("z_value")
{
    CHECK(z_value(102, 2) == 1);
    CHECK(z_value(102, 6) == 25);
    CHECK(z_value(7, 2) == 0);
    CHECK_THROWS(z_value(102, 7));
    CHECK_THROWS(z_value(102, -1));

    SUBCASE("zero digits and one digits below i fill 2^{i+1} - 1")
    {
        for (std::int64_t m = 1; m <= (1 << 16); ++m)
            for (int i = 0; i <= top_bit(m); ++i) {
                const std::int64_t low = m & ((std::int64_t{1} << (i + 1)) - 1);
                CHECK(z_value(m, i) + low == (std::int64_t{1} << (i + 1)) - 1);
            }
    }
}

TEST_CASE("gap_p2n")
{
    for (int k = 2; k <= 5; ++k)
        CHECK(gap_p2n(51, k) == 127 - 25 * k);
    CHECK(gap_p2n(51, 3) == 52);
    CHECK(gap_p2n(51, 6) == 1);
    CHECK(gap_p2n(51, 7) == 0);

    CHECK(gap_p2n(2, 2) == 1);
    CHECK(gap_p2n_run_formula(2, 2) == 0);

    CHECK_THROWS(gap_p2n(0, 3));
    CHECK_THROWS(gap_p2n(5, 1));

    SUBCASE("k = 2 branch")
    {
        for (std::int64_t n = 1; n <= 2000; ++n) {
            const std::int64_t e = top_bit(n);
            CHECK(gap_p2n(n, 2) == 4 * n - (std::int64_t{1} << (e + 2)) + 1);
            CHECK(gap_p2n(n, 2) > 0);
        }
    }
    SUBCASE("k >= 3: bounded, non-increasing, zero at powers of two")
    {
        for (std::int64_t n = 1; n <= 2000; ++n) {
            for (int k = 3; k <= 12; ++k) {
                CHECK(gap_p2n(n, k) >= 0);
                CHECK(gap_p2n(n, k) <= 2 * n);
                CHECK(gap_p2n(n, k + 1) <= gap_p2n(n, k));
                CHECK(gap_p2n(n, k) == gap_p2n_run_formula(n, k));
            }
            if (is_power_of_two(n))
                CHECK(gap_p2n(n, 3) == 0);
        }
    }
    SUBCASE("zero once k passes the longest run")
    {
        for (std::int64_t n = 1; n <= 2000; ++n) {
            const int l = longest_one_run(2 * n);
            CHECK(gap_p2n(n, (1 << (l + 1)) - 1) == 0);
        }
    }
}

TEST_CASE("binom_parity")
{
    CHECK(binom_parity(3, 1) == 1);
    CHECK(binom_parity(4, 2) == 0);
    CHECK(binom_parity(5, 7) == 0);
    for (int e = 0; e <= 5; ++e) {
        const std::uint64_t m = (std::uint64_t{1} << (e + 2)) - 1;
        for (std::uint64_t j = 0; j <= m; ++j)
            CHECK(binom_parity(m, j) == 1);
    }
    for (std::uint64_t n = 1; n <= 60; ++n)
        CHECK(binom_parity(4 * n, 2 * n) == 0);
    for (int m = 0; m <= 256; ++m)
        for (int j = 0; j <= m; ++j)
            CHECK(binom_parity(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(j))
                  == static_cast<int>(binom_mod2_pascal(m, j)));
}

TEST_CASE("longest_one_run")
{
    CHECK(longest_one_run(102) == 2);
    CHECK(longest_one_run(7) == 3);
    CHECK(longest_one_run(8) == 1);
    CHECK_THROWS(longest_one_run(0));
}
