#pragma once

// Randomized checks of the capacity calculus in the tensor ring, and a
// brute-force look at squares of zero divisors.

#include <cstdint>
#include <string>
#include <vector>

namespace spn {

struct PropertyReport {
    std::string name;
    std::size_t instances = 0;
    std::vector<std::string> violations;  // at most a handful are kept
    std::size_t violation_count = 0;
    bool ok() const noexcept { return violation_count == 0; }
};

/// For x^{2n - p_1} (x) ... (x) x^{2n - p_k} with sum p_r <= A, the capacity
/// is at most floor(A / 2).
PropertyReport check_power_capacity(std::uint64_t seed, std::size_t samples);

/// A basis element of the genus-g tensor power, times j distinct fresh
/// generators x_{e,i} (i > g), has capacity at most c - j and vanishes when
/// c < j.
PropertyReport check_fresh_generator_capacity(std::uint64_t seed, std::size_t samples);

/// b (x) prod_r (x_{1,g+1} + x_{r,g+1})^{eps_r}: every term has capacity at
/// most c(b) - floor((1 + sum eps) / 2), and the product vanishes when c(b)
/// is smaller than that.
PropertyReport check_fresh_zero_divisor_capacity(std::uint64_t seed, std::size_t samples);

/// m * fresh distinct generators is nonzero iff their number is <= c(m).
PropertyReport check_capacity_meaning(std::uint64_t seed, std::size_t samples);

struct MidWindowInstance {
    int n = 0;
    int g = 0;
    int k = 0;
    int gap_p2n = 0;
};

/// Even k >= 4 in the middle genus window, small enough to expand.
std::vector<MidWindowInstance> mid_window_instances(int n_max, int g_max, int k_max);

/// Even k = 2L, gap_k(P^{2n}) = 2h - 1 and (g-1)(L-1) < h <= (g-1)L, with
/// t = h - (g-1)(L-1). For m = x^{2n-p_1} (x) ... (x) x^{2n-p_k} of degree
/// 2nk - gap - d and e a product of distinct x_{1,i} + x_{r,i} (i >= 2) with
/// deg(e) > gap + d - t, the product m e vanishes.
PropertyReport check_mid_window_vanishing(std::uint64_t seed, std::size_t samples);

struct SquareCheck {
    int n = 0;
    int g = 0;
    int j = 0;         // number of distinct squared zero divisors
    bool vanishes = false;
};

/// prod_{i=1}^{j} (x_{1,i} + x_{2,i})^2 for k = 2 and every j <= g.
std::vector<SquareCheck> squared_zero_divisors(int n_max, int g_max);

}  // namespace spn
