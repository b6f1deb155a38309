#include "spn/tensor.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace spn {

namespace {

void cancel_pairs(std::vector<TensorMonomial>& v)
{
    std::sort(v.begin(), v.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if ((j - i) % 2 == 1)
            v[out++] = v[i];
        i = j;
    }
    v.resize(out);
}

PackedKey low_mask(int bits)
{
    return bits >= 128 ? ~PackedKey{0} : ((PackedKey{1} << bits) - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// TensorContext

TensorContext::TensorContext(RingContext ring, int k) : ring_(ring), k_(k)
{
    if (k < 2 || k > kMaxSlots)
        throw std::invalid_argument(fmt::format("k must lie in [2, {}], got {}", kMaxSlots, k));
    const int a_bits = std::bit_width(static_cast<unsigned>(ring_.dimension()));
    idx_bits_ = ring_.g() - 1;
    slot_bits_ = a_bits + idx_bits_;
    if (slot_bits_ * k_ > 128)
        throw std::invalid_argument(fmt::format(
            "tensor layout needs {} bits (n={}, g={}, k={}); at most 128 are available", slot_bits_ * k_,
            ring_.n(), ring_.g(), k_));
}

TensorMonomial TensorContext::pack(std::span<const Monomial> slots) const
{
    if (static_cast<int>(slots.size()) != k_)
        throw std::invalid_argument(fmt::format("expected {} slots, got {}", k_, slots.size()));
    PackedKey key = 0;
    for (const auto& m : slots) {
        const PackedKey field = (PackedKey(static_cast<unsigned>(m.a)) << idx_bits_) | PackedKey(m.idx);
        key = (key << slot_bits_) | field;
    }
    return TensorMonomial{key};
}

Monomial TensorContext::slot(const TensorMonomial& tm, int r) const noexcept
{
    const int shift = (k_ - r) * slot_bits_;
    const PackedKey field = (tm.key >> shift) & low_mask(slot_bits_);
    Monomial m;
    m.idx = static_cast<std::uint64_t>(field & low_mask(idx_bits_));
    m.a = static_cast<int>(field >> idx_bits_);
    return m;
}

std::vector<Monomial> TensorContext::unpack(const TensorMonomial& tm) const
{
    std::vector<Monomial> out(static_cast<std::size_t>(k_));
    for (int r = 1; r <= k_; ++r)
        out[r - 1] = slot(tm, r);
    return out;
}

int TensorContext::degree(const TensorMonomial& tm) const noexcept
{
    int d = 0;
    for (int r = 1; r <= k_; ++r)
        d += slot(tm, r).degree();
    return d;
}

// ---------------------------------------------------------------------------
// TensorClass

TensorClass::TensorClass(std::vector<TensorMonomial> raw) : terms_(std::move(raw))
{
    cancel_pairs(terms_);
}

bool TensorClass::contains(const TensorMonomial& tm) const
{
    return std::binary_search(terms_.begin(), terms_.end(), tm);
}

bool TensorClass::is_homogeneous(const TensorContext& tctx) const
{
    if (terms_.empty())
        return true;
    const int d = tctx.degree(terms_.front());
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return tctx.degree(t) == d; });
}

TensorClass& TensorClass::operator+=(const TensorClass& other)
{
    std::vector<TensorMonomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

// ---------------------------------------------------------------------------
// ZdExponents

std::size_t ZdExponents::index(int r, int i) const
{
    if (r < 2 || r > k_ || i < 1 || i > g_)
        throw std::out_of_range(fmt::format("exponent a[{},{}] outside r in 2..{}, i in 1..{}", r, i, k_, g_));
    return static_cast<std::size_t>((r - 2) * g_ + (i - 1));
}

int ZdExponents::total() const noexcept
{
    return std::accumulate(a_.begin(), a_.end(), 0);
}

int ZdExponents::column_sum(int i) const
{
    int s = 0;
    for (int r = 2; r <= k_; ++r)
        s += at(r, i);
    return s;
}

// ---------------------------------------------------------------------------
// PowerCache

std::shared_ptr<const TensorClass> PowerCache::find(int r, int i, int m) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find({r, i, m});
    return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const TensorClass> PowerCache::insert(int r, int i, int m, TensorClass value)
{
    auto ptr = std::make_shared<const TensorClass>(std::move(value));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace({r, i, m}, ptr);
    return it->second;
}

std::size_t PowerCache::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

// ---------------------------------------------------------------------------
// Operations

MonomialOrZero generator_power(int i, int e, const RingContext& ctx)
{
    Monomial m;
    if (i == 1) {
        m.a = e;
    } else {
        m.a = 2 * (e / 2);
        if (e % 2 == 1)
            m.idx = std::uint64_t{1} << (i - 2);
    }
    if (m.weight() > ctx.n())
        return std::nullopt;
    return m;
}

TensorClass unit_class(const TensorContext& tctx)
{
    std::vector<Monomial> ones(static_cast<std::size_t>(tctx.k()));
    return TensorClass({tctx.pack(ones)});
}

TensorClass zero_divisor(int r, int i, const TensorContext& tctx)
{
    return zd_power(r, i, 1, tctx);
}

TensorClass tensor_mul(const TensorClass& p, const TensorClass& q, const TensorContext& tctx)
{
    if (p.empty() || q.empty())
        return {};
    const int k = tctx.k();
    const RingContext& ring = tctx.ring();

    std::vector<std::array<Monomial, kMaxSlots>> qs(q.size());
    for (std::size_t j = 0; j < q.size(); ++j)
        for (int r = 1; r <= k; ++r)
            qs[j][r - 1] = tctx.slot(q.terms()[j], r);

    std::vector<TensorMonomial> raw;
    raw.reserve(p.size() * q.size());
    std::array<Monomial, kMaxSlots> ps{};
    std::array<Monomial, kMaxSlots> prod{};
    for (const auto& pt : p.terms()) {
        for (int r = 1; r <= k; ++r)
            ps[r - 1] = tctx.slot(pt, r);
        for (const auto& qt : qs) {
            bool alive = true;
            for (int r = 0; r < k && alive; ++r) {
                auto m = monomial_mul(ps[r], qt[r], ring);
                if (!m)
                    alive = false;
                else
                    prod[r] = *m;
            }
            if (alive)
                raw.push_back(tctx.pack(std::span<const Monomial>(prod.data(), static_cast<std::size_t>(k))));
        }
    }
    return TensorClass(std::move(raw));
}

TensorClass zd_power(int r, int i, int m, const TensorContext& tctx)
{
    if (r < 2 || r > tctx.k())
        throw std::out_of_range(fmt::format("slot r={} outside 2..{}", r, tctx.k()));
    if (i < 1 || i > tctx.g())
        throw std::out_of_range(fmt::format("generator i={} outside 1..{}", i, tctx.g()));
    if (m < 0)
        throw std::invalid_argument("negative exponent");

    std::vector<Monomial> slots(static_cast<std::size_t>(tctx.k()));
    std::vector<TensorMonomial> raw;
    // C(m, j) is odd exactly when j is a submask of m.
    for (int j = m;; j = (j - 1) & m) {
        auto left = generator_power(i, j, tctx.ring());
        auto right = generator_power(i, m - j, tctx.ring());
        if (left && right) {
            slots[0] = *left;
            slots[r - 1] = *right;
            raw.push_back(tctx.pack(slots));
        }
        if (j == 0)
            break;
    }
    return TensorClass(std::move(raw));
}

TensorClass zd_power_naive(int r, int i, int m, const TensorContext& tctx)
{
    TensorClass acc = unit_class(tctx);
    const TensorClass z = zero_divisor(r, i, tctx);
    for (int s = 0; s < m; ++s)
        acc = tensor_mul(acc, z, tctx);
    return acc;
}

TensorClass zd_product(const ZdExponents& expts, const TensorContext& tctx, PowerCache* cache)
{
    if (expts.k() != tctx.k() || expts.g() != tctx.g())
        throw std::invalid_argument("exponent table does not match the tensor context");
    TensorClass acc = unit_class(tctx);
    for (int i = 1; i <= tctx.g(); ++i) {
        for (int r = 2; r <= tctx.k(); ++r) {
            const int m = expts.at(r, i);
            if (m == 0)
                continue;
            std::shared_ptr<const TensorClass> power;
            if (cache) {
                power = cache->find(r, i, m);
                if (!power)
                    power = cache->insert(r, i, m, zd_power(r, i, m, tctx));
            } else {
                power = std::make_shared<const TensorClass>(zd_power(r, i, m, tctx));
            }
            acc = tensor_mul(acc, *power, tctx);
            if (acc.empty())
                return acc;
        }
    }
    return acc;
}

int tensor_capacity(const TensorMonomial& tm, const TensorContext& tctx)
{
    int c = 0;
    for (int r = 1; r <= tctx.k(); ++r)
        c += capacity(tctx.slot(tm, r), tctx.ring());
    return c;
}

bool contains(const TensorClass& tc, const TensorMonomial& tm)
{
    return tc.contains(tm);
}

CohClass total_multiplication(const TensorClass& tc, const TensorContext& tctx)
{
    std::vector<Monomial> raw;
    for (const auto& t : tc.terms()) {
        MonomialOrZero acc = Monomial{};
        for (int r = 1; r <= tctx.k() && acc; ++r)
            acc = monomial_mul(*acc, tctx.slot(t, r), tctx.ring());
        if (acc)
            raw.push_back(*acc);
    }
    return CohClass(std::move(raw));
}

std::string to_string(const TensorMonomial& tm, const TensorContext& tctx)
{
    std::string s;
    for (int r = 1; r <= tctx.k(); ++r) {
        if (r > 1)
            s += " ⊗ ";
        s += to_string(tctx.slot(tm, r));
    }
    return s;
}

std::string to_string(const TensorClass& tc, const TensorContext& tctx)
{
    if (tc.empty())
        return "0";
    std::string s;
    for (const auto& t : tc.terms()) {
        if (!s.empty())
            s += " + ";
        s += to_string(t, tctx);
    }
    return s;
}

}  // namespace spn
