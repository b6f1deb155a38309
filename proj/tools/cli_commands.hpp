#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spn/search.hpp"

namespace spn::cli {

enum class Format { Md, Csv, Json };

Format parse_format(const std::string& s);

/// "5" or "2..7"; throws std::invalid_argument on empty or malformed ranges.
Range parse_range(const std::string& s, int min_value = 1);

struct GridSpec {
    Range n{1, 3};
    Range g{1, 3};
    Range k{2, 2};
};

/// "n=1..3,g=1..3,k=2"; unspecified axes keep their defaults.
GridSpec parse_grid(const std::string& s);

struct RunConfig {
    Range n{1, 1};
    Range g{1, 1};
    Range k{2, 2};
    Format format = Format::Md;
    std::uint64_t budget = 4'000'000'000ULL;
    bool restricted = true;
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

struct VerifyRequest {
    std::optional<GridSpec> grid;
    bool reduction_soundness = false;
    bool capacity_props = false;
    bool structural = false;
    bool davis = false;
    bool bad_zero_divisors = false;
    std::optional<std::string> report_path;
};

struct CommandOutput {
    std::string text;
    int exit_code = 0;
};

/// Markdown case table of gap_k(SP^51(N_g)).
std::string gap_table_n51();

CommandOutput cmd_table(const RunConfig& cfg, bool n51_preset);
CommandOutput cmd_verify(const RunConfig& cfg, const VerifyRequest& req);
CommandOutput cmd_witness(const RunConfig& cfg);
CommandOutput cmd_tcgen(const RunConfig& cfg);

}  // namespace spn::cli
