#pragma once

// Brute-force zero-divisor cup length: the largest total exponent of a
// non-vanishing product prod (x_{1,i} + x_{r,i})^{a_{r,i}}, found by expanding
// candidate products in the tensor ring.
//
// The restricted search only visits tuples with
//   a_{2,1} >= a_{3,1} >= ... >= a_{k,1},
//   a_{r,i} in {0, 1} for i >= 2,
//   a_{2,2} >= a_{2,3} >= ... >= a_{2,g},
// which is enough to attain the maximum. Every exponent is capped at 4n - 1
// because (x_{1,i} + x_{r,i})^{4n} = 0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spn/closed_forms.hpp"
#include "spn/tensor.hpp"

namespace spn {

using ExponentTuple = ZdExponents;

struct SearchOptions {
    bool restricted = true;
    /// Drop partial-product terms whose capacity cannot absorb the remaining
    /// fresh-generator factors.
    bool capacity_pruning = true;
    /// Maximum number of tensor terms produced across all expansions.
    std::uint64_t budget = 4'000'000'000ULL;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct ZclWitness {
    ExponentTuple tuple;
    TensorMonomial survivor;
    int total_degree = 0;
};

struct ZclSearchResult {
    int value = 0;          // exact maximum, or a lower bound when !exact
    bool exact = false;
    int upper_bound = 0;    // every degree above this was refuted
    std::optional<ZclWitness> witness;
    std::uint64_t terms_expanded = 0;
    std::uint64_t tuples_evaluated = 0;
    std::uint64_t tuples_pruned = 0;
};

int per_factor_cap(int n) noexcept;

bool is_reduced(const ExponentTuple& t);

/// Tuples of the given total degree in ascending lexicographic order of
/// their row-major flattening.
std::vector<ExponentTuple> tuples_of_degree(int n, int g, int k, int degree, bool restricted);

/// Re-expands the product without pruning and checks the survivor.
bool verify_witness(const ZclWitness& w, const TensorContext& tctx);

/// Top-down over the total degree; the reported witness is the
/// lexicographically least successful tuple at the maximal degree,
/// independent of the thread count.
ZclSearchResult search_zcl(int n, int g, int k, const SearchOptions& opts = {});

struct MaxEllResult {
    int ell = -1;
    bool exact = false;
    std::optional<ExponentTuple> tuple;
    std::uint64_t terms_expanded = 0;
};

/// Largest l <= 2n such that some prod_{r >= 2} (x_{1,1} + x_{r,1})^{a_r} on
/// P^{2n} contains x^l (x) x^{2n} (x) ... (x) x^{2n}.
MaxEllResult max_ell(int n, int k, std::uint64_t budget = 4'000'000'000ULL);

struct Range {
    int lo = 1;
    int hi = 1;
};

enum class Verdict { Agree, Mismatch, BudgetExceeded };
std::string_view to_string(Verdict v);

struct CellReport {
    int n = 0;
    int g = 0;
    int k = 0;
    Verdict verdict = Verdict::Agree;
    ZclValue closed;
    ZclSearchResult search;
    bool witness_valid = false;
};

struct GridReport {
    std::vector<CellReport> cells;  // sorted by (n, g, k)
    std::size_t agree = 0;
    std::size_t mismatch = 0;
    std::size_t budget_exceeded = 0;
    bool ok() const noexcept { return mismatch == 0; }
};

GridReport verify_grid(Range n, Range g, Range k, const SearchOptions& opts = {});

struct SoundnessCell {
    int n = 0;
    int g = 0;
    int k = 0;
    int restricted = 0;
    int unrestricted = 0;
    int unpruned = 0;
};

/// Restricted vs unrestricted, and pruned vs unpruned, on every cell.
std::vector<SoundnessCell> reduction_soundness(Range n, Range g, Range k, const SearchOptions& opts = {});

std::string describe(const ExponentTuple& t);

}  // namespace spn
