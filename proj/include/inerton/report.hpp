#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "inerton/errors.hpp"

namespace inerton {

enum class OutputFormat { csv, json, table };

const char* to_string(OutputFormat f);
OutputFormat output_format_from_string(const std::string& s);

/// One table cell. Numbers render as 6-significant-digit scientific
/// notation in CSV/table and as full-precision doubles in JSON.
struct Cell {
    enum class Kind { number, text, empty };
    Kind kind = Kind::empty;
    double num = 0.0;
    std::string str;

    static Cell number(double v) { return {Kind::number, v, {}}; }
    static Cell text(std::string s) { return {Kind::text, 0.0, std::move(s)}; }
    static Cell none() { return {}; }
};

/// Column-oriented report with ordered metadata. CSV output is exactly
/// header + rows (metadata lives in the JSON and table renderings).
struct Report {
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Byte-stable rendering; identical inputs give identical output.
std::string render(const Report& report, OutputFormat format);

} // namespace inerton
