#pragma once

// Binary-expansion invariants and the zero-divisor gap of even-dimensional
// real projective spaces.

#include <cstdint>
#include <vector>

namespace spn {

struct BinaryProfile {
    std::int64_t m = 0;
    int e = 0;                  // 2^e <= m < 2^{e+1}
    std::vector<int> digits;    // digits[j] = delta_j, j = 0..e
};

BinaryProfile binary_profile(std::int64_t m);

/// e with 2^e <= m < 2^{e+1}; m must be positive.
int top_bit(std::int64_t m);
bool is_power_of_two(std::int64_t m) noexcept;

/// Positions i where a run of at least two ones starts, reading from the
/// top: delta_i = delta_{i-1} = 1 and delta_{i+1} = 0.
std::vector<int> s_set(std::int64_t m);

/// Sum of 2^j over the zero digits j <= i. Requires 0 <= i <= e.
std::int64_t z_value(std::int64_t m, int i);

/// Zero-divisor gap of P^{2n}. For k >= 3 this is
/// max over i in S(2n) of {0, 2^{i+1} - 1 - k Z_i(2n)}; for k = 2 it is
/// 4n - 2^{e+2} + 1 with 2^e <= n.
std::int64_t gap_p2n(std::int64_t n, int k);

/// The k >= 3 maximum evaluated at any k >= 2. At k = 2 it disagrees with
/// gap_p2n (already at n = 2); kept for side-by-side reporting.
std::int64_t gap_p2n_run_formula(std::int64_t n, int k);

/// C(m, j) mod 2, via Lucas: odd iff j is a bitwise submask of m.
int binom_parity(std::uint64_t m, std::uint64_t j) noexcept;

/// Length of the longest run of consecutive ones in the binary expansion.
int longest_one_run(std::int64_t m);

}  // namespace spn
