#include "spn/tc.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "spn/combinatorics.hpp"

namespace spn {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return (a + b - 1) / b;
}

constexpr std::string_view kOddSaturation = "odd_k_saturation";
constexpr std::string_view kEvenSaturation = "even_k_saturation";
constexpr std::string_view kPowerOfTwo = "power_of_two_n";
constexpr std::string_view kPowerOfTwoK2 = "power_of_two_n_k2";
constexpr std::string_view kBoundsMeet = "bounds_meet";

std::string superscript(std::int64_t v)
{
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(v))
        out += digits[c - '0'];
    return out;
}

}  // namespace

bool exact_rule_holds(std::string_view rule, std::int64_t n, std::int64_t g, int k)
{
    if (rule == kPowerOfTwo)
        return k >= 3 && is_power_of_two(n);
    if (rule == kPowerOfTwoK2)
        return k == 2 && is_power_of_two(n) && n >= 2;
    if (rule == kOddSaturation)
        return k >= 3 && k % 2 == 1 && g >= ceil_div(gap_p2n(n, k), k - 1) + 1;
    if (rule == kEvenSaturation)
        return k >= 4 && k % 2 == 0 && g >= gap_p2n(n, k) / (k - 2) + 2;
    if (rule == kBoundsMeet) {
        const TcReport r = tc_bounds(n, g, k);
        return r.tc_lower == r.tc_upper;
    }
    return false;
}

TcReport tc_bounds(std::int64_t n, std::int64_t g, int k)
{
    TcReport r;
    r.n = n;
    r.g = g;
    r.k = k;
    r.zcl = zcl_closed(n, g, k);
    const std::int64_t full = 2 * n * k;
    const std::int64_t cat_power = 2 * n * (k - 1);

    r.tc_lower = std::max(r.zcl.value, cat_power);
    r.tc_lower_rule = r.zcl.value >= cat_power ? "zcl_lower_bound" : "cat_power_lower_bound";
    if (k == 2 && n >= 2) {
        r.tc_upper = 4 * n - 1;
        r.tc_upper_rule = "k2_tightened_upper_bound";
    } else {
        r.tc_upper = full;
        r.tc_upper_rule = "cat_product_upper_bound";
    }

    r.cat_cof_lower = r.zcl.value;
    if (k == 2 && n >= 2) {
        r.cat_cof_upper = r.tc_upper;
        r.cat_cof_upper_rule = "k2_tc_chain";
    } else if (r.tc_upper + 1 <= full) {
        r.cat_cof_upper = r.tc_upper + 1;
        r.cat_cof_upper_rule = "tc_plus_one";
    } else {
        r.cat_cof_upper = full;
        r.cat_cof_upper_rule = "dimension_bound";
    }

    for (std::string_view rule : {kPowerOfTwoK2, kPowerOfTwo, kOddSaturation, kEvenSaturation}) {
        if (exact_rule_holds(rule, n, g, k)) {
            r.justification = rule;
            break;
        }
    }
    if (r.justification.empty() && r.tc_lower == r.tc_upper)
        r.justification = kBoundsMeet;
    if (!r.justification.empty()) {
        if (r.tc_lower != r.tc_upper)
            throw std::logic_error(fmt::format("rule {} fired at (n={}, g={}, k={}) but bounds are [{}, {}]",
                                               r.justification, n, g, k, r.tc_lower, r.tc_upper));
        r.tc_exact = r.tc_lower;
    }
    if (r.cat_cof_lower == r.cat_cof_upper)
        r.cat_cof_exact = r.cat_cof_lower;
    return r;
}

std::vector<Annotation> annotations(std::int64_t n, std::int64_t g, int k)
{
    std::vector<Annotation> out;
    if (k != 2)
        return out;
    if (n == 1 && g >= 2) {
        out.push_back({"TC_2(N_g)", 4, "Dranishnikov; Cohen-Vandembroucq"});
        out.push_back({"cat(C_{Delta_2} N_g)", 3, "Dranishnikov; Cohen-Vandembroucq"});
    }
    if (n == 1 && g == 1)
        out.push_back({"TC_2(P^2)", 3, "Farber-Tabachnikov-Yuzvinsky (immersion dimension of P^2)"});
    return out;
}

bool davis_saturated(std::int64_t n, int k)
{
    const int l = longest_one_run(n);
    return k >= (1 << (l + 1)) - 1;
}

Interval operator+(Interval a, Interval b)
{
    return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator*(std::int64_t c, Interval a)
{
    return c >= 0 ? Interval{c * a.lo, c * a.hi} : Interval{c * a.hi, c * a.lo};
}

int GenPolynomial::degree() const
{
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
        if (!(coeffs[j].lo == 0 && coeffs[j].hi == 0))
            return j;
    return 0;
}

std::int64_t GenPolynomial::value_at_one() const
{
    if (exact) {
        std::int64_t s = 0;
        for (const auto& c : coeffs)
            s += c.lo;
        return s;
    }
    // The (1-t)^2 part vanishes at t = 1.
    return 2 * n * (stabilization_index - (stabilization_index - 1));
}

bool in_tail_regime(std::int64_t n, std::int64_t g)
{
    return g >= gap_p2n(n, 2) / 2 + 2;
}

GenPolynomial tcgen_polynomial(std::int64_t n, std::int64_t g)
{
    if (n < 1 || g < 1)
        throw std::invalid_argument("n and g must be positive");
    GenPolynomial p;
    p.n = n;
    p.g = g;
    p.special_regime = in_tail_regime(n, g) || is_power_of_two(n);
    if (p.special_regime) {
        p.stabilization_index = 3;
    } else if (g >= 2) {
        p.stabilization_index = static_cast<int>(gap_p2n(n, 2) / (g - 1) + 3);
    } else {
        throw std::invalid_argument(fmt::format(
            "no generating polynomial for n={}, g=1: the stabilization index is only available for g >= 2, "
            "for g >= floor(gap_2(P^(2n))/2) + 2, or for n a power of 2",
            n));
    }
    const int d = p.stabilization_index;
    p.degree_bound = d;

    // The construction needs TC_k = 2nk from k = D on.
    for (int k = d; k <= 2 * d + 12; ++k) {
        const TcReport r = tc_bounds(n, g, k);
        if (!r.tc_exact || *r.tc_exact != 2 * n * k)
            throw std::logic_error(fmt::format("TC_{} not saturated at (n={}, g={}) past D={}", k, n, g, d));
    }

    p.tc_values.resize(static_cast<std::size_t>(std::max(0, d - 2)));
    p.exact = true;
    for (int k = 1; k <= d - 2; ++k) {
        const TcReport r = tc_bounds(n, g, k + 1);
        p.tc_values[k - 1] = r.tc_exact ? Interval{*r.tc_exact, *r.tc_exact} : Interval{r.tc_lower, r.tc_upper};
        p.exact = p.exact && r.tc_exact.has_value();
    }

    p.coeffs.assign(static_cast<std::size_t>(d) + 1, Interval{});
    p.coeffs[d - 1] = p.coeffs[d - 1] + Interval{2 * n * d, 2 * n * d};
    p.coeffs[d] = p.coeffs[d] + Interval{-2 * n * (d - 1), -2 * n * (d - 1)};
    // (1 - t)^2 = 1 - 2t + t^2 against sum TC_{k+1} t^k.
    for (int k = 1; k <= d - 2; ++k) {
        const Interval tc = p.tc_values[k - 1];
        p.coeffs[k] = p.coeffs[k] + tc;
        p.coeffs[k + 1] = p.coeffs[k + 1] + (-2) * tc;
        p.coeffs[k + 2] = p.coeffs[k + 2] + tc;
    }
    return p;
}

std::vector<std::int64_t> series_coefficients(const GenPolynomial& p, int count)
{
    if (!p.exact)
        throw std::invalid_argument("series expansion needs exact coefficients");
    std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(0, count)), 0);
    // 1 / (1 - t)^2 = sum (m + 1) t^m.
    for (int k = 0; k < count; ++k)
        for (int j = 0; j <= std::min<int>(k, static_cast<int>(p.coeffs.size()) - 1); ++j)
            out[k] += (k - j + 1) * p.coeffs[j].lo;
    return out;
}

std::string to_string(const GenPolynomial& p)
{
    std::string out;
    for (int j = 0; j < static_cast<int>(p.coeffs.size()); ++j) {
        const Interval c = p.coeffs[j];
        if (c.lo == 0 && c.hi == 0)
            continue;
        const std::string power = j == 0 ? "" : (j == 1 ? "t" : "t" + superscript(j));
        if (c.exact()) {
            const std::int64_t mag = c.lo < 0 ? -c.lo : c.lo;
            if (out.empty())
                out += c.lo < 0 ? "−" : "";
            else
                out += c.lo < 0 ? " − " : " + ";
            out += (mag == 1 && j > 0) ? power : std::to_string(mag) + power;
        } else {
            if (!out.empty())
                out += " + ";
            out += fmt::format("[{}, {}]{}", c.lo, c.hi, power);
        }
    }
    return out.empty() ? "0" : out;
}

bool arithmetic_tail_check(std::int64_t n, std::int64_t g, int horizon)
{
    if (!in_tail_regime(n, g))
        throw std::invalid_argument(fmt::format("(n={}, g={}) is outside g >= floor(gap_2(P^(2n))/2) + 2", n, g));
    for (int k = 3; k < horizon; ++k) {
        const TcReport a = tc_bounds(n, g, k);
        const TcReport b = tc_bounds(n, g, k + 1);
        if (!a.tc_exact || !b.tc_exact || *b.tc_exact - *a.tc_exact != 2 * n)
            return false;
    }
    return true;
}

}  // namespace spn
