// spn-tool: zero-divisor cup length and TC bounds of SP^n(N_g).
//
//   spn-tool table -n 51 -g 1..40 -k 2..6 --format csv
//   spn-tool table --example-3-1
//   spn-tool verify --grid n=1..3,g=1..3,k=2 --capacity-props --seed 7
//   spn-tool witness -n 1 -g 2 -k 2
//   spn-tool tcgen -n 2 -g 1

#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"

namespace {

struct RawOptions {
    std::string n = "1";
    std::string g = "1";
    std::string k = "2";
    std::string format = "md";
    std::uint64_t budget = 4'000'000'000ULL;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    bool unrestricted = false;
};

void add_common(CLI::App* sub, RawOptions& raw, bool with_k)
{
    sub->add_option("-n", raw.n, "n or a..b")->capture_default_str();
    sub->add_option("-g", raw.g, "genus or a..b")->capture_default_str();
    if (with_k)
        sub->add_option("-k", raw.k, "k or a..b")->capture_default_str();
    sub->add_option("--format", raw.format, "md, csv or json")->capture_default_str();
    sub->add_option("--budget", raw.budget, "maximum expanded tensor terms")->check(CLI::PositiveNumber);
    sub->add_option("--threads", raw.threads, "worker threads (0 = all cores)");
    sub->add_option("--seed", raw.seed, "seed for randomized checks");
    sub->add_flag("--unrestricted", raw.unrestricted, "search every tuple, not only reduced ones");
}

spn::cli::RunConfig to_config(const RawOptions& raw)
{
    spn::cli::RunConfig cfg;
    cfg.n = spn::cli::parse_range(raw.n);
    cfg.g = spn::cli::parse_range(raw.g);
    cfg.k = spn::cli::parse_range(raw.k, 2);
    cfg.format = spn::cli::parse_format(raw.format);
    cfg.budget = raw.budget;
    cfg.threads = raw.threads;
    cfg.seed = raw.seed;
    cfg.restricted = !raw.unrestricted;
    return cfg;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zero-divisor cup length and sequential TC of symmetric products of non-orientable surfaces"};
    app.require_subcommand(1);
    RawOptions raw;

    auto* table = app.add_subcommand("table", "closed-form zcl, gap and TC bounds over a grid");
    add_common(table, raw, true);
    bool example = false;
    table->add_flag("--example-3-1", example, "case table of gap_k(SP^51(N_g))");

    auto* verify = app.add_subcommand("verify", "brute-force and property campaigns");
    add_common(verify, raw, true);
    spn::cli::VerifyRequest req;
    std::string grid;
    std::string report;
    verify->add_option("--grid", grid, "n=a..b,g=a..b,k=a..b");
    verify->add_flag("--reduction-soundness", req.reduction_soundness, "restricted vs unrestricted search");
    verify->add_flag("--capacity-props", req.capacity_props, "randomized capacity properties");
    verify->add_flag("--structural", req.structural, "laws of the closed forms");
    verify->add_flag("--davis", req.davis, "projective gap vs brute force");
    verify->add_flag("--bad-zero-divisors", req.bad_zero_divisors, "products of squared zero divisors");
    verify->add_option("--report", report, "write the JSON report here");

    auto* witness = app.add_subcommand("witness", "maximal non-vanishing zero-divisor product");
    add_common(witness, raw, true);

    auto* tcgen = app.add_subcommand("tcgen", "TC-generating polynomial");
    add_common(tcgen, raw, false);

    CLI11_PARSE(app, argc, argv);

    try {
        const spn::cli::RunConfig cfg = to_config(raw);
        spn::cli::CommandOutput out;
        if (*table) {
            out = spn::cli::cmd_table(cfg, example);
        } else if (*verify) {
            if (!grid.empty())
                req.grid = spn::cli::parse_grid(grid);
            if (!report.empty())
                req.report_path = report;
            out = spn::cli::cmd_verify(cfg, req);
        } else if (*witness) {
            out = spn::cli::cmd_witness(cfg);
        } else {
            out = spn::cli::cmd_tcgen(cfg);
        }
        std::cout << out.text;
        return out.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
