#include "cli_commands.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "render.hpp"
#include "spn/closed_forms.hpp"
#include "spn/combinatorics.hpp"
#include "spn/properties.hpp"
#include "spn/tc.hpp"

namespace spn::cli {

using nlohmann::json;

namespace {

constexpr int kExampleN = 51;
constexpr int kExampleGenusScan = 128;
constexpr int kExampleMaxK = 16;
constexpr std::size_t kMaxTableCells = 1'000'000;
constexpr std::size_t kMaxTraceTerms = 256;

int parse_int(std::string_view s)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(fmt::format("not an integer: '{}'", s));
    return v;
}

std::string range_text(Range r)
{
    return r.lo == r.hi ? std::to_string(r.lo) : fmt::format("{}..{}", r.lo, r.hi);
}

json range_json(Range r)
{
    return json::array({r.lo, r.hi});
}

std::string format_name(Format f)
{
    switch (f) {
    case Format::Md: return "md";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    }
    return "?";
}

json base_meta(const std::string& command, const RunConfig& cfg)
{
    return {{"tool", "spn-tool"}, {"command", command}, {"format", format_name(cfg.format)}};
}

std::string render_table(const Table& t, Format f)
{
    return f == Format::Csv ? render_csv(t) : render_markdown(t);
}

// c + s g, written the way the case table prints it.
std::string affine_text(long long c, long long s)
{
    if (s == 0)
        return std::to_string(c);
    const long long mag = s < 0 ? -s : s;
    const std::string term = mag == 1 ? "g" : fmt::format("{}g", mag);
    if (c == 0)
        return s < 0 ? "−" + term : term;
    return fmt::format("{} {} {}", c, s < 0 ? "−" : "+", term);
}

std::string genus_text(int lo, int hi, bool open)
{
    if (open)
        return fmt::format("g ≥ {}", lo);
    if (lo == hi)
        return fmt::format("g = {}", lo);
    if (lo == 1)
        return fmt::format("g ≤ {}", hi);
    return fmt::format("{} ≤ g ≤ {}", lo, hi);
}

json tuple_json(const ExponentTuple& t)
{
    json rows = json::array();
    for (int r = 2; r <= t.k(); ++r) {
        json row = json::array();
        for (int i = 1; i <= t.g(); ++i)
            row.push_back(t.at(r, i));
        rows.push_back(row);
    }
    return rows;
}

json witness_json(const ZclWitness& w, const TensorContext& tctx)
{
    return {{"exponents", tuple_json(w.tuple)},
            {"description", describe(w.tuple)},
            {"survivor", to_string(w.survivor, tctx)},
            {"total_degree", ruled(w.total_degree, "exhaustive_search")}};
}

json expansion_trace(const ExponentTuple& t, const TensorContext& tctx)
{
    const TensorClass full = zd_product(t, tctx);
    json terms = json::array();
    for (const auto& tm : full.terms()) {
        if (terms.size() == kMaxTraceTerms)
            break;
        terms.push_back(to_string(tm, tctx));
    }
    return {{"term_count", full.size()}, {"terms", terms}, {"truncated", full.size() > kMaxTraceTerms}};
}

SearchOptions search_options(const RunConfig& cfg)
{
    SearchOptions o;
    o.restricted = cfg.restricted;
    o.budget = cfg.budget;
    o.threads = cfg.threads;
    return o;
}

struct Section {
    std::string text;
    json rows = json::array();
    json failures = json::array();
};

Section grid_section(const GridSpec& spec, const RunConfig& cfg)
{
    Section s;
    const GridReport rep = verify_grid(spec.n, spec.g, spec.k, search_options(cfg));
    Table t{{"n", "g", "k", "search", "closed", "case", "verdict", "witness", "survivor"}, {}};
    for (const auto& c : rep.cells) {
        const TensorContext tctx(RingContext(c.n, c.g), c.k);
        const std::string rule{rule_id(c.closed.tag.label)};
        json row = {{"kind", "grid_cell"},
                    {"n", c.n},
                    {"g", c.g},
                    {"k", c.k},
                    {"closed", ruled(c.closed.value, rule)},
                    {"search", ruled(c.search.value, c.search.exact ? "exhaustive_search" : "search_lower_bound")},
                    {"search_upper_bound", ruled(c.search.upper_bound, "refuted_above")},
                    {"terms_expanded", ruled(static_cast<long long>(c.search.terms_expanded), "term_count")},
                    {"verdict", std::string(to_string(c.verdict))}};
        std::string wdesc = "-";
        std::string wsurv = "-";
        if (c.search.witness) {
            row["witness"] = witness_json(*c.search.witness, tctx);
            wdesc = describe(c.search.witness->tuple);
            wsurv = to_string(c.search.witness->survivor, tctx);
        }
        s.rows.push_back(row);
        t.rows.push_back({std::to_string(c.n), std::to_string(c.g), std::to_string(c.k),
                          c.search.exact ? std::to_string(c.search.value) : fmt::format("≤ {}", c.search.upper_bound),
                          std::to_string(c.closed.value), std::string(to_string(c.closed.tag.label)),
                          std::string(to_string(c.verdict)), wdesc, wsurv});
        if (c.verdict == Verdict::Mismatch) {
            json f = {{"kind", "grid_mismatch"},
                      {"n", c.n},
                      {"g", c.g},
                      {"k", c.k},
                      {"closed", ruled(c.closed.value, rule)},
                      {"closed_case", std::string(to_string(c.closed.tag.label))},
                      {"search", ruled(c.search.value, "exhaustive_search")},
                      {"witness_valid", c.witness_valid}};
            if (c.search.witness) {
                f["witness"] = witness_json(*c.search.witness, tctx);
                f["expansion"] = expansion_trace(c.search.witness->tuple, tctx);
            }
            s.failures.push_back(f);
        }
    }
    s.text = fmt::format("## grid n={} g={} k={}\n\n", range_text(spec.n), range_text(spec.g), range_text(spec.k));
    s.text += render_table(t, cfg.format);
    s.text += fmt::format("\n{} cells: {} agree, {} mismatch, {} budget-exceeded\n", rep.cells.size(), rep.agree,
                          rep.mismatch, rep.budget_exceeded);
    return s;
}

Section soundness_section(const RunConfig& cfg)
{
    Section s;
    Table t{{"n", "g", "k", "restricted", "unrestricted", "unpruned", "agree"}, {}};
    std::size_t bad = 0;
    for (const auto& c : reduction_soundness({1, 2}, {1, 2}, {2, 3}, search_options(cfg))) {
        const bool ok = c.restricted >= 0 && c.restricted == c.unrestricted && c.restricted == c.unpruned;
        t.rows.push_back({std::to_string(c.n), std::to_string(c.g), std::to_string(c.k), std::to_string(c.restricted),
                          std::to_string(c.unrestricted), std::to_string(c.unpruned), ok ? "yes" : "no"});
        json row = {{"kind", "reduction_soundness"},
                    {"n", c.n},
                    {"g", c.g},
                    {"k", c.k},
                    {"restricted", ruled(c.restricted, "exhaustive_search")},
                    {"unrestricted", ruled(c.unrestricted, "exhaustive_search_unrestricted")},
                    {"unpruned", ruled(c.unpruned, "exhaustive_search_unpruned")},
                    {"agree", ok}};
        s.rows.push_back(row);
        if (!ok) {
            ++bad;
            s.failures.push_back(row);
        }
    }
    s.text = "## reduction soundness n=1..2 g=1..2 k=2..3\n\n" + render_table(t, cfg.format);
    s.text += fmt::format("\n{} disagreements\n", bad);
    return s;
}

void add_property(Section& s, Table& t, const PropertyReport& rep)
{
    t.rows.push_back({rep.name, std::to_string(rep.instances), std::to_string(rep.violation_count)});
    s.rows.push_back({{"kind", "property"},
                      {"name", rep.name},
                      {"instances", ruled(static_cast<long long>(rep.instances), "sample_count")},
                      {"violations", ruled(static_cast<long long>(rep.violation_count), "violation_count")}});
    if (!rep.ok())
        s.failures.push_back({{"kind", "property_violation"}, {"name", rep.name}, {"examples", rep.violations}});
}

Section capacity_section(const RunConfig& cfg)
{
    Section s;
    Table t{{"property", "instances", "violations"}, {}};
    add_property(s, t, check_power_capacity(cfg.seed, 10'000));
    add_property(s, t, check_fresh_generator_capacity(cfg.seed + 1, 10'000));
    add_property(s, t, check_fresh_zero_divisor_capacity(cfg.seed + 2, 10'000));
    add_property(s, t, check_capacity_meaning(cfg.seed + 3, 10'000));
    add_property(s, t, check_mid_window_vanishing(cfg.seed + 4, 1'000));
    s.text = fmt::format("## capacity properties (seed {})\n\n", cfg.seed) + render_table(t, cfg.format);
    return s;
}

Section structural_section(const RunConfig& cfg)
{
    Section s;
    const LawReport rep = check_structural_laws(64, 40, 8);
    s.rows.push_back({{"kind", "structural_laws"},
                      {"cells", ruled(static_cast<long long>(rep.cells), "cell_count")},
                      {"checks", ruled(static_cast<long long>(rep.checks), "check_count")},
                      {"violations", ruled(static_cast<long long>(rep.violations.size()), "violation_count")}});
    for (const auto& v : rep.violations)
        s.failures.push_back({{"kind", "structural_law"}, {"detail", v}});
    s.text = fmt::format("## structural laws n<=64 g<=40 k<=8\n\n{} cells, {} checks, {} violations\n", rep.cells,
                         rep.checks, rep.violations.size());
    for (std::size_t i = 0; i < std::min<std::size_t>(rep.violations.size(), 10); ++i)
        s.text += "- " + rep.violations[i] + "\n";
    (void)cfg;
    return s;
}

Section davis_section(const RunConfig& cfg)
{
    Section s;
    Table t{{"n", "k", "max_ell", "2n - max_ell", "gap_k(P^2n)", "agree"}, {}};
    auto emit = [&](int n, int k, long long lhs, long long rhs, const std::string& lhs_text, bool ok, json row) {
        t.rows.push_back({std::to_string(n), std::to_string(k), lhs_text, std::to_string(lhs), std::to_string(rhs),
                          ok ? "yes" : "no"});
        s.rows.push_back(row);
        if (!ok)
            s.failures.push_back(row);
    };
    for (int n = 1; n <= 5; ++n) {
        for (int k = 3; k <= 6; ++k) {
            const MaxEllResult m = max_ell(n, k, cfg.budget);
            const long long gp = gap_p2n(n, k);
            const bool ok = m.exact && 2 * n - m.ell == gp;
            emit(n, k, 2 * n - m.ell, gp, std::to_string(m.ell), ok,
                 {{"kind", "projective_gap"},
                  {"n", n},
                  {"k", k},
                  {"max_ell", ruled(m.ell, "distinguished_survivor_search")},
                  {"gap_p2n", ruled(gp, "run_formula")},
                  {"agree", ok}});
        }
    }
    SearchOptions o = search_options(cfg);
    for (int n = 1; n <= 8; ++n) {
        const long long gp = gap_p2n(n, 2);
        const long long direct = 4LL * n - (1LL << (top_bit(n) + 2)) + 1;
        const ZclSearchResult r = search_zcl(n, 1, 2, o);
        const long long searched = 4LL * n - r.value;
        const bool ok = r.exact && gp == direct && gp == searched;
        emit(n, 2, searched, gp, "-", ok,
             {{"kind", "projective_gap"},
              {"n", n},
              {"k", 2},
              {"gap_from_search", ruled(searched, "exhaustive_search")},
              {"gap_p2n", ruled(gp, "k2_formula")},
              {"agree", ok}});
    }
    s.text = "## projective gap\n\n" + render_table(t, cfg.format);
    return s;
}

Section squares_section(const RunConfig& cfg)
{
    Section s;
    Table t{{"n", "g", "j", "j <= min(g, n)", "product"}, {}};
    for (const auto& c : squared_zero_divisors(3, 3)) {
        const bool in_range = c.j <= std::min(c.g, c.n);
        t.rows.push_back({std::to_string(c.n), std::to_string(c.g), std::to_string(c.j), in_range ? "yes" : "no",
                          c.vanishes ? "0" : "nonzero"});
        s.rows.push_back({{"kind", "squared_zero_divisors"},
                          {"n", c.n},
                          {"g", c.g},
                          {"j", c.j},
                          {"vanishes", c.vanishes},
                          {"in_stated_range", in_range}});
    }
    s.text = "## products of squared zero divisors, k = 2\n\n" + render_table(t, cfg.format);
    return s;
}

}  // namespace

Format parse_format(const std::string& s)
{
    if (s == "md")
        return Format::Md;
    if (s == "csv")
        return Format::Csv;
    if (s == "json")
        return Format::Json;
    throw std::invalid_argument(fmt::format("unknown format '{}' (md, csv, json)", s));
}

Range parse_range(const std::string& s, int min_value)
{
    Range r;
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(s);
    } else {
        r.lo = parse_int(std::string_view(s).substr(0, dots));
        r.hi = parse_int(std::string_view(s).substr(dots + 2));
    }
    if (r.lo > r.hi)
        throw std::invalid_argument(fmt::format("empty range '{}'", s));
    if (r.lo < min_value)
        throw std::invalid_argument(fmt::format("range '{}' starts below {}", s, min_value));
    return r;
}

GridSpec parse_grid(const std::string& s)
{
    GridSpec spec;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(fmt::format("grid item '{}' is not axis=range", item));
        const std::string axis = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (axis == "n")
            spec.n = parse_range(value);
        else if (axis == "g")
            spec.g = parse_range(value);
        else if (axis == "k")
            spec.k = parse_range(value, 2);
        else
            throw std::invalid_argument(fmt::format("unknown grid axis '{}'", axis));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return spec;
}

std::string gap_table_n51()
{
    struct Row {
        int k;
        std::string genus;
        std::string gap;
    };
    std::vector<Row> rows;
    for (int k = 2; k <= kExampleMaxK; ++k) {
        std::vector<long long> gap(kExampleGenusScan + 1, 0);
        for (int g = 1; g <= kExampleGenusScan; ++g)
            gap[g] = gap_closed(kExampleN, g, k);

        int g = 1;
        while (g <= kExampleGenusScan) {
            if (gap[g] == 0) {
                ++g;
                continue;
            }
            const int start = g;
            long long slope = 0;
            if (g + 1 <= kExampleGenusScan && gap[g + 1] != 0)
                slope = gap[g + 1] - gap[g];
            int end = g;
            while (end + 1 <= kExampleGenusScan && gap[end + 1] != 0 && gap[end + 1] - gap[end] == slope)
                ++end;
            const long long intercept = gap[start] - slope * start;
            // A run may also fit the last genus of the previous run.
            int lo = start;
            if (lo > 1 && gap[lo - 1] == intercept + slope * (lo - 1))
                --lo;
            const bool open = end == kExampleGenusScan;
            const bool constant = slope == 0;
            rows.push_back({k, genus_text(lo, end, open), constant ? std::to_string(gap[start]) : affine_text(intercept, slope)});
            g = end + 1;
        }
    }

    std::string out = fmt::format("# gap_k(SP^{}(N_g))\n\n", kExampleN);
    Table t{{"k", "g", "gap"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({std::to_string(r.k), r.genus, r.gap});
    t.rows.push_back({"otherwise", "", "0"});
    return out + render_markdown(t);
}

CommandOutput cmd_table(const RunConfig& cfg, bool n51_preset)
{
    if (n51_preset)
        return {gap_table_n51(), 0};

    const std::size_t cells = static_cast<std::size_t>(cfg.n.hi - cfg.n.lo + 1) *
                              static_cast<std::size_t>(cfg.g.hi - cfg.g.lo + 1) *
                              static_cast<std::size_t>(cfg.k.hi - cfg.k.lo + 1);
    if (cells > kMaxTableCells)
        throw std::invalid_argument(fmt::format("table of {} cells exceeds the limit of {}", cells, kMaxTableCells));

    Table t{{"n", "g", "k", "zcl", "gap", "case", "tc_lower", "tc_upper", "tc_exact", "tc_rule"}, {}};
    json rows = json::array();
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        for (int g = cfg.g.lo; g <= cfg.g.hi; ++g) {
            for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
                const TcReport r = tc_bounds(n, g, k);
                const std::string rule{rule_id(r.zcl.tag.label)};
                const long long gap = gap_closed(n, g, k);
                t.rows.push_back({std::to_string(n), std::to_string(g), std::to_string(k), std::to_string(r.zcl.value),
                                  std::to_string(gap), std::string(to_string(r.zcl.tag.label)),
                                  std::to_string(r.tc_lower), std::to_string(r.tc_upper),
                                  r.tc_exact ? std::to_string(*r.tc_exact) : "-",
                                  r.justification.empty() ? "-" : r.justification});
                json notes = json::array();
                for (const auto& a : annotations(n, g, k))
                    notes.push_back({{"quantity", a.quantity}, {"value", a.value}, {"source", a.source}});
                rows.push_back({{"n", n},
                                {"g", g},
                                {"k", k},
                                {"case", std::string(to_string(r.zcl.tag.label))},
                                {"zcl", ruled(r.zcl.value, rule)},
                                {"gap", ruled(gap, rule)},
                                {"gap_p2n", ruled(r.zcl.tag.gap_p2n, k == 2 ? "k2_formula" : "run_formula")},
                                {"tc_lower", ruled(r.tc_lower, r.tc_lower_rule)},
                                {"tc_upper", ruled(r.tc_upper, r.tc_upper_rule)},
                                {"tc_exact", r.tc_exact ? ruled(*r.tc_exact, r.justification) : json(nullptr)},
                                {"cat_cof_lower", ruled(r.cat_cof_lower, "zcl_lower_bound")},
                                {"cat_cof_upper", ruled(r.cat_cof_upper, r.cat_cof_upper_rule)},
                                {"annotations", notes}});
            }
        }
    }
    if (cfg.format == Format::Json) {
        json meta = base_meta("table", cfg);
        meta["n"] = range_json(cfg.n);
        meta["g"] = range_json(cfg.g);
        meta["k"] = range_json(cfg.k);
        return {render_json(meta, rows, json::array()), 0};
    }
    return {render_table(t, cfg.format), 0};
}

CommandOutput cmd_verify(const RunConfig& cfg, const VerifyRequest& req)
{
    std::vector<Section> sections;
    const bool any_suite = req.grid || req.reduction_soundness || req.capacity_props || req.structural || req.davis ||
                           req.bad_zero_divisors;
    if (req.grid)
        sections.push_back(grid_section(*req.grid, cfg));
    else if (!any_suite)
        sections.push_back(grid_section(GridSpec{cfg.n, cfg.g, cfg.k}, cfg));
    if (req.reduction_soundness)
        sections.push_back(soundness_section(cfg));
    if (req.capacity_props)
        sections.push_back(capacity_section(cfg));
    if (req.structural)
        sections.push_back(structural_section(cfg));
    if (req.davis)
        sections.push_back(davis_section(cfg));
    if (req.bad_zero_divisors)
        sections.push_back(squares_section(cfg));

    json rows = json::array();
    json failures = json::array();
    std::string text;
    for (const auto& s : sections) {
        for (const auto& r : s.rows)
            rows.push_back(r);
        for (const auto& f : s.failures)
            failures.push_back(f);
        if (!text.empty())
            text += "\n";
        text += s.text;
    }
    const bool pass = failures.empty();
    json meta = base_meta("verify", cfg);
    meta["seed"] = cfg.seed;
    meta["budget"] = cfg.budget;
    meta["restricted"] = cfg.restricted;
    meta["status"] = pass ? "pass" : "fail";
    const std::string doc = render_json(meta, rows, failures);

    if (req.report_path) {
        std::ofstream out(*req.report_path);
        if (!out)
            throw std::runtime_error(fmt::format("cannot write report to {}", *req.report_path));
        out << doc;
    }
    if (cfg.format == Format::Json)
        return {doc, pass ? 0 : 1};
    text += fmt::format("\n{}: {} failure(s)\n", pass ? "PASS" : "FAIL", failures.size());
    return {text, pass ? 0 : 1};
}

CommandOutput cmd_witness(const RunConfig& cfg)
{
    json rows = json::array();
    std::string text;
    int code = 0;
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        for (int g = cfg.g.lo; g <= cfg.g.hi; ++g) {
            for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
                const TensorContext tctx(RingContext(n, g), k);
                const ZclSearchResult r = search_zcl(n, g, k, search_options(cfg));
                const ZclValue closed = zcl_closed(n, g, k);
                if (!text.empty())
                    text += "\n";
                text += fmt::format("n={} g={} k={}\n", n, g, k);
                json row = {{"n", n}, {"g", g}, {"k", k}, {"closed", ruled(closed.value, std::string(rule_id(closed.tag.label)))}};
                if (!r.exact || !r.witness) {
                    code = 2;
                    text += fmt::format("budget of {} terms exhausted; zcl <= {}\n", cfg.budget, r.upper_bound);
                    row["search_upper_bound"] = ruled(r.upper_bound, "refuted_above");
                    rows.push_back(row);
                    continue;
                }
                const bool valid = verify_witness(*r.witness, tctx);
                text += fmt::format("tuple: {}\n", describe(r.witness->tuple));
                text += fmt::format("survivor: {}\n", to_string(r.witness->survivor, tctx));
                text += fmt::format("total degree: {}\n", r.witness->total_degree);
                text += fmt::format("closed form: {} ({})\n", closed.value, to_string(closed.tag.label));
                text += fmt::format("re-verified: {}\n", valid ? "yes" : "no");
                row["zcl"] = ruled(r.value, "exhaustive_search");
                row["witness"] = witness_json(*r.witness, tctx);
                row["witness_valid"] = valid;
                rows.push_back(row);
                if (!valid || r.value != closed.value)
                    code = 1;
            }
        }
    }
    if (cfg.format == Format::Json)
        return {render_json(base_meta("witness", cfg), rows, json::array()), code};
    return {text, code};
}

CommandOutput cmd_tcgen(const RunConfig& cfg)
{
    json rows = json::array();
    json failures = json::array();
    std::string text;
    int code = 0;
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        for (int g = cfg.g.lo; g <= cfg.g.hi; ++g) {
            if (!text.empty())
                text += "\n";
            text += fmt::format("n={} g={}\n", n, g);
            GenPolynomial p;
            try {
                p = tcgen_polynomial(n, g);
            } catch (const std::invalid_argument& e) {
                code = 2;
                text += fmt::format("unsupported: {}\n", e.what());
                failures.push_back({{"kind", "unsupported_regime"}, {"n", n}, {"g", g}, {"detail", e.what()}});
                continue;
            }
            text += fmt::format("P(t) = {} ({}), P(1)={}\n", to_string(p), p.exact ? "exact" : "interval",
                                p.value_at_one());
            text += fmt::format("D = {}, degree {} (bound {})\n", p.stabilization_index, p.degree(), p.degree_bound);
            // tc_values[i] is TC_{i+2}; list only up to where TC_k = 2nk takes over.
            std::size_t saturated_from = p.tc_values.size();
            while (saturated_from > 0) {
                const Interval v = p.tc_values[saturated_from - 1];
                if (!(v.exact() && v.lo == 2LL * n * static_cast<long long>(saturated_from + 1)))
                    break;
                --saturated_from;
            }
            std::string tcs;
            for (std::size_t i = 0; i < saturated_from; ++i) {
                const Interval v = p.tc_values[i];
                tcs += fmt::format("{}TC_{} = {}", i ? ", " : "", i + 2,
                                   v.exact() ? std::to_string(v.lo) : fmt::format("[{}, {}]", v.lo, v.hi));
            }
            text += tcs + fmt::format("{}TC_k = {}k for k >= {}\n", tcs.empty() ? "" : "; ", 2 * n, saturated_from + 2);

            json coeffs = json::array();
            for (const auto& c : p.coeffs)
                coeffs.push_back({{"lo", c.lo}, {"hi", c.hi}});
            json row = {{"n", n},
                        {"g", g},
                        {"polynomial", to_string(p)},
                        {"coefficients", coeffs},
                        {"exact", p.exact},
                        {"stabilization_index", ruled(p.stabilization_index, p.special_regime ? "cubic_regime" : "genus_stabilization")},
                        {"degree", ruled(p.degree(), "polynomial_degree")},
                        {"value_at_one", ruled(p.value_at_one(), p.exact ? "coefficient_sum" : "structured_form")}};
            if (p.exact) {
                const int count = std::max(11, 2 * p.stabilization_index + 1);
                const auto series = series_coefficients(p, count);
                bool ok = series[0] == 0;
                for (int k = 1; k < count; ++k)
                    ok = ok && tc_bounds(n, g, k + 1).tc_exact == series[k];
                text += fmt::format("series check up to t^{}: {}\n", count - 1, ok ? "ok" : "FAILED");
                row["series_round_trip"] = ok;
                if (!ok) {
                    code = 1;
                    failures.push_back({{"kind", "series_round_trip"}, {"n", n}, {"g", g}});
                }
            }
            rows.push_back(row);
        }
    }
    if (cfg.format == Format::Json)
        return {render_json(base_meta("tcgen", cfg), rows, failures), code};
    return {text, code};
}

}  // namespace spn::cli
