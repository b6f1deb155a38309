#pragma once

// The k-fold tensor power of the ring, the zero divisors x_{1,i} + x_{r,i},
// and products of their powers.

#include <array>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "spn/ring.hpp"

namespace spn {

inline constexpr int kMaxSlots = 16;

// All k slot monomials packed into one integer; slot 1 is most significant
// and inside a slot the x_1 exponent sits above the index bits, so the
// integer order is the lexicographic order on (slot 1, slot 2, ...).
using PackedKey = unsigned __int128;

struct TensorMonomial {
    PackedKey key = 0;
    auto operator<=>(const TensorMonomial&) const = default;
};

class TensorContext {
public:
    /// Throws std::invalid_argument if k < 2 or the packed layout exceeds 128 bits.
    TensorContext(RingContext ring, int k);

    const RingContext& ring() const noexcept { return ring_; }
    int k() const noexcept { return k_; }
    int n() const noexcept { return ring_.n(); }
    int g() const noexcept { return ring_.g(); }

    TensorMonomial pack(std::span<const Monomial> slots) const;
    /// Slot r, 1-based.
    Monomial slot(const TensorMonomial& tm, int r) const noexcept;
    std::vector<Monomial> unpack(const TensorMonomial& tm) const;
    int degree(const TensorMonomial& tm) const noexcept;

    bool operator==(const TensorContext& o) const noexcept { return ring_ == o.ring_ && k_ == o.k_; }

private:
    RingContext ring_;
    int k_;
    int idx_bits_;
    int slot_bits_;
};

/// Z/2 combination of tensor monomials; sorted, no duplicates.
class TensorClass {
public:
    TensorClass() = default;
    /// Equal entries cancel in pairs.
    explicit TensorClass(std::vector<TensorMonomial> raw);

    const std::vector<TensorMonomial>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool contains(const TensorMonomial& tm) const;
    /// Largest term in packed order; the class must be non-empty.
    TensorMonomial max_term() const { return terms_.back(); }
    bool is_homogeneous(const TensorContext& tctx) const;

    template <class Pred>
    TensorClass filtered(Pred keep) const
    {
        TensorClass out;
        for (const auto& t : terms_)
            if (keep(t))
                out.terms_.push_back(t);
        return out;
    }

    TensorClass& operator+=(const TensorClass& other);
    bool operator==(const TensorClass&) const = default;

private:
    std::vector<TensorMonomial> terms_;
};

/// Exponents a_{r,i} of prod (x_{1,i} + x_{r,i})^{a_{r,i}}, 2 <= r <= k, 1 <= i <= g.
class ZdExponents {
public:
    ZdExponents() = default;
    ZdExponents(int k, int g) : k_(k), g_(g), a_(static_cast<std::size_t>((k - 1) * g), 0) {}

    int k() const noexcept { return k_; }
    int g() const noexcept { return g_; }
    int& at(int r, int i) { return a_[index(r, i)]; }
    int at(int r, int i) const { return a_[index(r, i)]; }
    int total() const noexcept;
    /// Sum over r of a_{r,i}.
    int column_sum(int i) const;
    /// Row-major (r, then i) flattening; the order used for witnesses.
    const std::vector<int>& flat() const noexcept { return a_; }

    auto operator<=>(const ZdExponents&) const = default;

private:
    std::size_t index(int r, int i) const;

    int k_ = 0;
    int g_ = 0;
    std::vector<int> a_;
};

/// Thread-safe memo of zd_power results; concurrent inserts of the same key
/// are harmless because the computed values are identical.
class PowerCache {
public:
    std::shared_ptr<const TensorClass> find(int r, int i, int m) const;
    std::shared_ptr<const TensorClass> insert(int r, int i, int m, TensorClass value);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::tuple<int, int, int>, std::shared_ptr<const TensorClass>> entries_;
};

TensorClass unit_class(const TensorContext& tctx);
TensorClass zero_divisor(int r, int i, const TensorContext& tctx);
TensorClass tensor_mul(const TensorClass& p, const TensorClass& q, const TensorContext& tctx);
/// (x_{1,i} + x_{r,i})^m, expanded over the odd binomial coefficients.
TensorClass zd_power(int r, int i, int m, const TensorContext& tctx);
/// Factors with i = 1 first, then ascending i; stops at the first empty
/// partial product.
TensorClass zd_product(const ZdExponents& expts, const TensorContext& tctx, PowerCache* cache = nullptr);
int tensor_capacity(const TensorMonomial& tm, const TensorContext& tctx);
bool contains(const TensorClass& tc, const TensorMonomial& tm);
/// Image under the k-fold cup product (the map induced by the diagonal).
CohClass total_multiplication(const TensorClass& tc, const TensorContext& tctx);
/// zd_power with repeated multiplication instead of binomial parity.
TensorClass zd_power_naive(int r, int i, int m, const TensorContext& tctx);

/// x_1^e for i = 1, otherwise x_1^{2 floor(e/2)} x_i^{e mod 2}.
MonomialOrZero generator_power(int i, int e, const RingContext& ctx);

std::string to_string(const TensorMonomial& tm, const TensorContext& tctx);
std::string to_string(const TensorClass& tc, const TensorContext& tctx);

}  // namespace spn
