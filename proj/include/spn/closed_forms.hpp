#pragma once

// Closed forms for zcl_k and gap_k of SP^n(N_g), their case structure, and
// the laws governing the increment g -> g + 1.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spn {

enum class CaseLabel {
    K2SmallG,     // k = 2, g <= 2n - 2^{e+1} + 1
    K2LargeG,     // k = 2, g beyond that
    AOdd,         // odd k >= 3
    AEvenSmallG,  // even k >= 4, g <= floor(gap/k) + 1
    BEvenMidG,    // even k >= 4, up to floor(gap/(k-2)) + 1
    CEvenLargeG,  // even k >= 4, saturated
};

std::string_view to_string(CaseLabel label);
/// Stable identifier used in machine-readable output.
std::string_view rule_id(CaseLabel label);

struct CaseTag {
    CaseLabel label = CaseLabel::K2SmallG;
    std::int64_t gap_p2n = 0;               // gap_k(P^{2n}) for this k
    std::optional<std::int64_t> k2_boundary;  // 2n - 2^{e+1} + 1, k = 2
    std::optional<std::int64_t> small_g_max;  // floor(gap/k) + 1, even k >= 4
    std::optional<std::int64_t> mid_g_max;    // floor(gap/(k-2)) + 1, even k >= 4

    bool operator==(const CaseTag&) const = default;
};

struct ZclValue {
    std::int64_t value = 0;
    CaseTag tag;
};

CaseTag classify(std::int64_t n, std::int64_t g, int k);

/// Throws std::invalid_argument for k < 2 or non-positive n, g; throws
/// std::logic_error if an internal consistency assertion fails.
ZclValue zcl_closed(std::int64_t n, std::int64_t g, int k);

/// 2nk - zcl, cross-checked against gap_closed_direct.
std::int64_t gap_closed(std::int64_t n, std::int64_t g, int k);
/// The gap written out case by case, without going through zcl.
std::int64_t gap_closed_direct(std::int64_t n, std::int64_t g, int k);

/// Predicted zcl_k(g+1) - zcl_k(g). The difference always lies in
/// [lower, upper]; when `exact` it equals upper. When
/// `equality_if_unsaturated`, it equals upper whenever zcl_k(g+1) != 2nk.
struct DiffPrediction {
    int case_id = 0;  // 1..6 in the order of the increment laws
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool exact = false;
    bool equality_if_unsaturated = false;
};

/// All increment laws whose hypotheses hold at (n, g, k); at least one.
std::vector<DiffPrediction> zcl_diff_predictions(std::int64_t n, std::int64_t g, int k);
DiffPrediction zcl_diff_predicted(std::int64_t n, std::int64_t g, int k);

/// Smallest g from which zcl_k = 2nk is guaranteed for k >= 3.
std::int64_t saturation_genus(std::int64_t n, int k);

struct LawReport {
    std::size_t cells = 0;
    std::size_t checks = 0;
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Identities, monotonicity, bounds, parity and increment laws over
/// 1 <= n <= n_max, 1 <= g <= g_max, 2 <= k <= k_max.
LawReport check_structural_laws(std::int64_t n_max, std::int64_t g_max, int k_max);

}  // namespace spn
