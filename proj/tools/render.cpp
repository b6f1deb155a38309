#include "render.hpp"

namespace spn::cli {

std::string render_markdown(const Table& t)
{
    auto line = [](const std::vector<std::string>& cells) {
        std::string out = "|";
        for (const auto& c : cells)
            out += " " + c + " |";
        return out + "\n";
    };
    std::string out = line(t.headers);
    out += "|";
    for (std::size_t i = 0; i < t.headers.size(); ++i)
        out += "---|";
    out += "\n";
    for (const auto& r : t.rows)
        out += line(r);
    return out;
}

std::string render_csv(const Table& t)
{
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"')
                q += '"';
            q += c;
        }
        return q + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ",";
            out += field(cells[i]);
        }
        return out + "\n";
    };
    std::string out = line(t.headers);
    for (const auto& r : t.rows)
        out += line(r);
    return out;
}

nlohmann::json ruled(long long value, const std::string& rule)
{
    return {{"value", value}, {"rule", rule}};
}

std::string render_json(const nlohmann::json& meta, const nlohmann::json& rows, const nlohmann::json& failures)
{
    nlohmann::json doc;
    doc["meta"] = meta;
    doc["rows"] = rows;
    doc["failures"] = failures;
    return doc.dump(2) + "\n";
}

}  // namespace spn::cli
