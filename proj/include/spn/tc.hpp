#pragma once

// Bounds and exact values of TC_k(SP^n(N_g)) and of cat of the diagonal
// cofiber, and the TC-generating polynomial
//   sum_{k >= 1} TC_{k+1} t^k = P(t) / (1 - t)^2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spn/closed_forms.hpp"

namespace spn {

struct TcReport {
    std::int64_t n = 0;
    std::int64_t g = 0;
    int k = 0;

    ZclValue zcl;
    std::int64_t tc_lower = 0;
    std::int64_t tc_upper = 0;
    std::optional<std::int64_t> tc_exact;
    std::int64_t cat_cof_lower = 0;
    std::int64_t cat_cof_upper = 0;
    std::optional<std::int64_t> cat_cof_exact;

    std::string tc_lower_rule;
    std::string tc_upper_rule;
    std::string cat_cof_upper_rule;
    /// Rule that made tc_exact available; empty when it is not.
    std::string justification;
};

/// Throws std::invalid_argument for k < 2 or non-positive n, g.
TcReport tc_bounds(std::int64_t n, std::int64_t g, int k);

/// Re-evaluates the hypotheses of an exactness rule.
bool exact_rule_holds(std::string_view rule, std::int64_t n, std::int64_t g, int k);

/// Values from the literature that the formulas here do not derive. Shown
/// next to computed results; never used to decide exactness.
struct Annotation {
    std::string quantity;
    std::int64_t value = 0;
    std::string source;
};

std::vector<Annotation> annotations(std::int64_t n, std::int64_t g, int k);

/// zcl_k(P^{2n}) = 2nk once k >= 2^{l+1} - 1, l the longest run of ones in n.
bool davis_saturated(std::int64_t n, int k);

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool exact() const noexcept { return lo == hi; }
    bool operator==(const Interval&) const = default;
};

Interval operator+(Interval a, Interval b);
Interval operator*(std::int64_t c, Interval a);

struct GenPolynomial {
    std::int64_t n = 0;
    std::int64_t g = 0;
    int stabilization_index = 0;      // D: TC_k = 2nk for all k >= D
    int degree_bound = 0;
    bool special_regime = false;      // the cubic form applies
    std::vector<Interval> tc_values;  // TC_{k+1} for k = 1 .. D-2
    std::vector<Interval> coeffs;     // coefficient of t^j, j = 0 .. D
    bool exact = false;

    int degree() const;
    /// P(1) evaluated from the coefficients when exact; otherwise from the
    /// structured form, which does not depend on the unknown TC values.
    std::int64_t value_at_one() const;
};

/// Throws std::invalid_argument outside g >= 2 or n a power of two.
GenPolynomial tcgen_polynomial(std::int64_t n, std::int64_t g);

/// Coefficients of P(t) / (1 - t)^2 up to t^count-1; requires an exact P.
std::vector<std::int64_t> series_coefficients(const GenPolynomial& p, int count);

std::string to_string(const GenPolynomial& p);

/// The tail regime g >= floor(gap_2(P^{2n}) / 2) + 2.
bool in_tail_regime(std::int64_t n, std::int64_t g);

/// TC_{k+1} - TC_k = 2n for 3 <= k < horizon. Throws std::invalid_argument
/// outside the tail regime.
bool arithmetic_tail_check(std::int64_t n, std::int64_t g, int horizon = 24);

}  // namespace spn
