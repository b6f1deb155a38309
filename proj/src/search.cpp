#include "spn/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace spn {

namespace {

constexpr int kMaxFreeBits = 24;

struct Evaluation {
    bool nonzero = false;
    bool pruned = false;
    TensorMonomial survivor;
    std::uint64_t terms = 0;
};

std::shared_ptr<const TensorClass> cached_power(PowerCache& cache, int r, int i, int m, const TensorContext& tctx)
{
    if (auto p = cache.find(r, i, m))
        return p;
    return cache.insert(r, i, m, zd_power(r, i, m, tctx));
}

// Lower bound on the capacity that column i consumes. Binary columns follow
// the fresh-generator estimate; anything else is only known not to raise it.
int column_requirement(const ExponentTuple& t, int i)
{
    int sum = 0;
    for (int r = 2; r <= t.k(); ++r) {
        if (t.at(r, i) > 1)
            return 0;
        sum += t.at(r, i);
    }
    return (1 + sum) / 2;
}

Evaluation evaluate(const ExponentTuple& t, const TensorContext& tctx, PowerCache& cache, bool pruning)
{
    Evaluation ev;
    const int k = tctx.k();
    const int g = tctx.g();

    std::vector<int> remaining(static_cast<std::size_t>(g) + 2, 0);
    for (int i = g; i >= 2; --i)
        remaining[i] = remaining[i + 1] + column_requirement(t, i);

    if (pruning && remaining[2] > 0) {
        const int d1 = t.column_sum(1);
        if ((2 * tctx.n() * k - d1) / 2 < remaining[2]) {
            ev.pruned = true;
            return ev;
        }
    }

    TensorClass acc = unit_class(tctx);
    for (int i = 1; i <= g; ++i) {
        if (pruning && i >= 2 && remaining[i] > 0) {
            const int need = remaining[i];
            acc = acc.filtered([&](const TensorMonomial& tm) { return tensor_capacity(tm, tctx) >= need; });
            if (acc.empty()) {
                ev.pruned = true;
                return ev;
            }
        }
        for (int r = 2; r <= k; ++r) {
            const int m = t.at(r, i);
            if (m == 0)
                continue;
            acc = tensor_mul(acc, *cached_power(cache, r, i, m, tctx), tctx);
            ev.terms += acc.size();
            if (acc.empty())
                return ev;
        }
    }
    ev.nonzero = true;
    ev.survivor = acc.max_term();
    return ev;
}

// Non-increasing sequences of length len with entries in [0, cap] and the given sum.
void nonincreasing(int len, int cap, int sum, std::vector<int>& cur, const std::function<void()>& emit)
{
    if (static_cast<int>(cur.size()) == len) {
        if (sum == 0)
            emit();
        return;
    }
    const int slots_left = len - static_cast<int>(cur.size());
    const int hi = std::min(cap, cur.empty() ? sum : std::min(sum, cur.back()));
    for (int v = hi; v >= 0; --v) {
        if (v * slots_left < sum)
            break;
        cur.push_back(v);
        nonincreasing(len, cap, sum - v, cur, emit);
        cur.pop_back();
    }
}

void compositions(int len, int cap, int sum, std::vector<int>& cur, const std::function<void()>& emit)
{
    if (static_cast<int>(cur.size()) == len) {
        if (sum == 0)
            emit();
        return;
    }
    const int slots_left = len - static_cast<int>(cur.size());
    for (int v = 0; v <= std::min(cap, sum); ++v) {
        if (static_cast<long>(cap) * (slots_left - 1) < sum - v)
            continue;
        cur.push_back(v);
        compositions(len, cap, sum - v, cur, emit);
        cur.pop_back();
    }
}

unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

int per_factor_cap(int n) noexcept
{
    return 4 * n - 1;
}

bool is_reduced(const ExponentTuple& t)
{
    for (int r = 3; r <= t.k(); ++r)
        if (t.at(r, 1) > t.at(r - 1, 1))
            return false;
    for (int r = 2; r <= t.k(); ++r)
        for (int i = 2; i <= t.g(); ++i)
            if (t.at(r, i) > 1)
                return false;
    for (int i = 3; i <= t.g(); ++i)
        if (t.at(2, i) > t.at(2, i - 1))
            return false;
    return true;
}

std::vector<ExponentTuple> tuples_of_degree(int n, int g, int k, int degree, bool restricted)
{
    const int cap = per_factor_cap(n);
    std::vector<ExponentTuple> out;
    if (degree < 0)
        return out;
    std::vector<int> cur;

    if (!restricted) {
        const int cells = (k - 1) * g;
        compositions(cells, cap, degree, cur, [&] {
            ExponentTuple t(k, g);
            for (int r = 2; r <= k; ++r)
                for (int i = 1; i <= g; ++i)
                    t.at(r, i) = cur[static_cast<std::size_t>((r - 2) * g + (i - 1))];
            out.push_back(std::move(t));
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    // Row 2 of the binary block is 1^j 0^{g-1-j}; rows 3..k are free.
    const int free_bits = (k - 2) * (g - 1);
    if (free_bits > kMaxFreeBits)
        throw std::invalid_argument(fmt::format("restricted enumeration too large for g={}, k={}", g, k));
    for (int lead = 0; lead <= g - 1; ++lead) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
            const int bits = lead + std::popcount(mask);
            if (bits > degree)
                continue;
            cur.clear();
            nonincreasing(k - 1, cap, degree - bits, cur, [&] {
                ExponentTuple t(k, g);
                for (int r = 2; r <= k; ++r)
                    t.at(r, 1) = cur[static_cast<std::size_t>(r - 2)];
                for (int i = 2; i <= g; ++i)
                    t.at(2, i) = i - 1 <= lead ? 1 : 0;
                for (int r = 3; r <= k; ++r)
                    for (int i = 2; i <= g; ++i)
                        t.at(r, i) = static_cast<int>((mask >> ((r - 3) * (g - 1) + (i - 2))) & 1U);
                out.push_back(std::move(t));
            });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_witness(const ZclWitness& w, const TensorContext& tctx)
{
    if (w.tuple.k() != tctx.k() || w.tuple.g() != tctx.g())
        return false;
    if (w.tuple.total() != w.total_degree || tctx.degree(w.survivor) != w.total_degree)
        return false;
    return zd_product(w.tuple, tctx).contains(w.survivor);
}

ZclSearchResult search_zcl(int n, int g, int k, const SearchOptions& opts)
{
    if (opts.budget == 0)
        throw std::invalid_argument("budget must be positive");
    const TensorContext tctx(RingContext(n, g), k);
    const unsigned nthreads = resolve_threads(opts.threads);
    PowerCache cache;
    ZclSearchResult res;
    std::atomic<std::uint64_t> terms{0};
    std::atomic<std::uint64_t> evaluated{0};
    std::atomic<std::uint64_t> pruned{0};

    for (int d = 2 * n * k; d >= 0; --d) {
        const std::vector<ExponentTuple> tuples = tuples_of_degree(n, g, k, d, opts.restricted);
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{tuples.size()};
        std::atomic<bool> exhausted{false};
        std::mutex found_mutex;
        TensorMonomial survivor;

        auto worker = [&] {
            for (;;) {
                if (exhausted.load(std::memory_order_relaxed))
                    return;
                const std::size_t j = next.fetch_add(1);
                if (j >= tuples.size() || j >= best.load())
                    return;
                const Evaluation ev = evaluate(tuples[j], tctx, cache, opts.capacity_pruning);
                evaluated.fetch_add(1, std::memory_order_relaxed);
                if (ev.pruned)
                    pruned.fetch_add(1, std::memory_order_relaxed);
                if (terms.fetch_add(ev.terms) + ev.terms > opts.budget)
                    exhausted.store(true);
                if (ev.nonzero) {
                    std::lock_guard lock(found_mutex);
                    if (j < best.load()) {
                        best.store(j);
                        survivor = ev.survivor;
                    }
                }
            }
        };

        if (nthreads <= 1 || tuples.size() < 2) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < std::min<std::size_t>(nthreads, tuples.size()); ++t)
                pool.emplace_back(worker);
        }

        res.terms_expanded = terms.load();
        res.tuples_evaluated = evaluated.load();
        res.tuples_pruned = pruned.load();
        if (best.load() < tuples.size()) {
            // Every degree above d was refuted, so d is exact even if the
            // budget ran out before smaller indices were tried.
            res.value = d;
            res.upper_bound = d;
            res.exact = true;
            res.witness = ZclWitness{tuples[best.load()], survivor, d};
            return res;
        }
        if (exhausted.load()) {
            res.value = 0;
            res.upper_bound = d;
            res.exact = false;
            return res;
        }
    }
    throw std::logic_error("the empty product never vanishes");
}

MaxEllResult max_ell(int n, int k, std::uint64_t budget)
{
    const TensorContext tctx(RingContext(n, 1), k);
    const int top = 2 * n;
    const int cap = per_factor_cap(n);
    MaxEllResult res;
    PowerCache cache;
    const Monomial full{top, 0};

    for (int ell = top; ell >= 0; --ell) {
        std::vector<Monomial> target_slots(static_cast<std::size_t>(k), full);
        target_slots[0] = Monomial{ell, 0};
        const TensorMonomial target = tctx.pack(target_slots);

        // a_r >= 2n is forced by slot r; the excess over 2n lands in slot 1.
        std::vector<std::vector<int>> excesses;
        std::vector<int> cur;
        nonincreasing(k - 1, cap - top, ell, cur, [&] { excesses.push_back(cur); });
        std::sort(excesses.begin(), excesses.end());

        for (const auto& ex : excesses) {
            TensorClass acc = unit_class(tctx);
            for (int r = 2; r <= k && !acc.empty(); ++r) {
                acc = tensor_mul(acc, *cached_power(cache, r, 1, top + ex[static_cast<std::size_t>(r - 2)], tctx), tctx);
                res.terms_expanded += acc.size();
                acc = acc.filtered([&](const TensorMonomial& tm) { return tctx.slot(tm, r) == full; });
            }
            if (acc.contains(target)) {
                ExponentTuple t(k, 1);
                for (int r = 2; r <= k; ++r)
                    t.at(r, 1) = top + ex[static_cast<std::size_t>(r - 2)];
                res.ell = ell;
                res.exact = true;
                res.tuple = std::move(t);
                return res;
            }
            if (res.terms_expanded > budget)
                return res;
        }
    }
    return res;
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

GridReport verify_grid(Range n, Range g, Range k, const SearchOptions& opts)
{
    GridReport rep;
    for (int nn = n.lo; nn <= n.hi; ++nn) {
        for (int gg = g.lo; gg <= g.hi; ++gg) {
            for (int kk = k.lo; kk <= k.hi; ++kk) {
                CellReport cell;
                cell.n = nn;
                cell.g = gg;
                cell.k = kk;
                cell.closed = zcl_closed(nn, gg, kk);
                cell.search = search_zcl(nn, gg, kk, opts);
                if (cell.search.witness)
                    cell.witness_valid = verify_witness(*cell.search.witness, TensorContext(RingContext(nn, gg), kk));
                if (!cell.search.exact) {
                    cell.verdict = Verdict::BudgetExceeded;
                    ++rep.budget_exceeded;
                } else if (cell.search.value == cell.closed.value && cell.witness_valid) {
                    cell.verdict = Verdict::Agree;
                    ++rep.agree;
                } else {
                    cell.verdict = Verdict::Mismatch;
                    ++rep.mismatch;
                }
                rep.cells.push_back(std::move(cell));
            }
        }
    }
    return rep;
}

std::vector<SoundnessCell> reduction_soundness(Range n, Range g, Range k, const SearchOptions& opts)
{
    auto value_of = [](const ZclSearchResult& r) { return r.exact ? r.value : -1; };
    std::vector<SoundnessCell> out;
    for (int nn = n.lo; nn <= n.hi; ++nn) {
        for (int gg = g.lo; gg <= g.hi; ++gg) {
            for (int kk = k.lo; kk <= k.hi; ++kk) {
                SearchOptions o = opts;
                SoundnessCell c{nn, gg, kk, 0, 0, 0};
                o.restricted = true;
                o.capacity_pruning = true;
                c.restricted = value_of(search_zcl(nn, gg, kk, o));
                o.capacity_pruning = false;
                c.unpruned = value_of(search_zcl(nn, gg, kk, o));
                o.restricted = false;
                c.unrestricted = value_of(search_zcl(nn, gg, kk, o));
                out.push_back(c);
            }
        }
    }
    return out;
}

std::string describe(const ExponentTuple& t)
{
    std::string out;
    for (int r = 2; r <= t.k(); ++r) {
        for (int i = 1; i <= t.g(); ++i) {
            if (t.at(r, i) == 0)
                continue;
            if (!out.empty())
                out += ", ";
            out += fmt::format("a_{{{},{}}}={}", r, i, t.at(r, i));
        }
    }
    return out.empty() ? "(empty product)" : out;
}

}  // namespace spn
