#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace spn::cli {

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string render_markdown(const Table& t);
/// RFC 4180 quoting for fields containing commas, quotes or newlines.
std::string render_csv(const Table& t);

/// {"value": v, "rule": rule}
nlohmann::json ruled(long long value, const std::string& rule);

/// {"meta": meta, "rows": rows, "failures": failures}, two-space indented.
std::string render_json(const nlohmann::json& meta, const nlohmann::json& rows, const nlohmann::json& failures);

}  // namespace spn::cli
