#pragma once

// Mod-2 cohomology ring of the n-th symmetric product of the genus-g
// non-orientable surface: generators x_1..x_g in degree one, y = x_i^2 for
// every i, and x_{i_1}...x_{i_r} y^s = 0 once r + s > n (distinct indices).
//
// Every monomial reduces to x_1^a * prod_{i in idx} x_i with idx a subset of
// {2..g}; it is a basis element iff floor((a+1)/2) + |idx| <= n.

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spn {

/// Capacity of the zero class.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// idx is a 64-bit word indexed by i-2, so genus is capped here.
inline constexpr int kMaxGenus = 64;

class RingContext {
public:
    RingContext(int n, int g);

    int n() const noexcept { return n_; }
    int g() const noexcept { return g_; }
    /// Real dimension of the manifold; no class lives above this degree.
    int dimension() const noexcept { return 2 * n_; }

    bool operator==(const RingContext&) const = default;

private:
    int n_;
    int g_;
};

struct Monomial {
    int a = 0;              // exponent of x_1
    std::uint64_t idx = 0;  // bit (i-2) set iff x_i divides, 2 <= i <= g

    int degree() const noexcept { return a + std::popcount(idx); }
    /// floor((a+1)/2) + |idx|; the monomial survives iff this is <= n.
    int weight() const noexcept { return (a + 1) / 2 + std::popcount(idx); }
    bool has(int i) const noexcept { return i == 1 ? a > 0 : ((idx >> (i - 2)) & 1U) != 0; }

    // Ascending a, then idx as a binary number.
    auto operator<=>(const Monomial&) const = default;
};

using MonomialOrZero = std::optional<Monomial>;

bool in_normal_form(const Monomial& m, const RingContext& ctx) noexcept;

/// Reduces x_1^{e_1} ... x_g^{e_g}. Throws std::invalid_argument when the
/// exponent vector does not have length g or has a negative entry.
MonomialOrZero normalize(std::span<const int> raw, const RingContext& ctx);

/// The degree-one generator x_i.
Monomial generator(int i, const RingContext& ctx);

MonomialOrZero monomial_mul(const Monomial& u, const Monomial& v, const RingContext& ctx);

/// n - weight(m) for a basis monomial, kMinusInfinity for zero.
int capacity(const MonomialOrZero& m, const RingContext& ctx) noexcept;

/// All basis monomials, ascending a then idx; optionally one degree only.
std::vector<Monomial> enumerate_basis(const RingContext& ctx, std::optional<int> degree = std::nullopt);

std::string to_string(const Monomial& m);

/// A Z/2-linear combination of basis monomials, stored as a sorted set.
class CohClass {
public:
    CohClass() = default;
    explicit CohClass(std::vector<Monomial> terms);  // duplicates cancel in pairs
    static CohClass of(const MonomialOrZero& m);

    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool contains(const Monomial& m) const;
    bool is_homogeneous() const noexcept;

    CohClass& operator+=(const CohClass& other);
    friend CohClass operator+(CohClass lhs, const CohClass& rhs) { return lhs += rhs; }
    bool operator==(const CohClass&) const = default;

private:
    std::vector<Monomial> terms_;
};

CohClass class_add(const CohClass& p, const CohClass& q);
CohClass class_mul(const CohClass& p, const CohClass& q, const RingContext& ctx);

std::string to_string(const CohClass& c);

}  // namespace spn
