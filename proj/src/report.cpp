#include "inerton/report.hpp"

#include <algorithm>

#include "inerton/units.hpp"

namespace inerton {

const char* to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
        case OutputFormat::table: return "table";
    }
    return "?";
}

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "table") return OutputFormat::table;
    throw config_error("unknown output format \"" + s + "\" (expected csv, json or table)");
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::number: return format_sci6(c.num);
        case Cell::Kind::text: return c.str;
        case Cell::Kind::empty: return "";
    }
    return "";
}

std::string render_csv(const Report& r) {
    std::string out;
    for (size_t i = 0; i < r.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(r.columns[i]);
    }
    out += '\n';
    for (const auto& row : r.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cell_text(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["metadata"] = r.metadata;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t i = 0; i < row.size() && i < r.columns.size(); ++i) {
            switch (row[i].kind) {
                case Cell::Kind::number: obj[r.columns[i]] = row[i].num; break;
                case Cell::Kind::text: obj[r.columns[i]] = row[i].str; break;
                case Cell::Kind::empty: obj[r.columns[i]] = nullptr; break;
            }
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string render_table(const Report& r) {
    std::string out;
    for (const auto& [key, value] : r.metadata.items()) {
        out += "# " + key + ": ";
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += '\n';
    }
    if (!r.metadata.empty()) out += '\n';

    std::vector<size_t> width(r.columns.size());
    for (size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(r.rows.size());
    for (const auto& row : r.rows) {
        std::vector<std::string> line;
        for (size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell_text(row[i]));
            if (i < width.size()) width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) out += "  ";
            out += line[i];
            if (i + 1 < line.size()) out.append(width[i] - line[i].size(), ' ');
        }
        out += '\n';
    };
    emit(r.columns);
    for (const auto& line : cells) emit(line);
    return out;
}

} // namespace

std::string render(const Report& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return render_csv(report);
        case OutputFormat::json: return render_json(report);
        case OutputFormat::table: return render_table(report);
    }
    throw config_error("unreachable output format");
}

} // namespace inerton
