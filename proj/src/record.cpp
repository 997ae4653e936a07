// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/record.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "lagdisp/errors.hpp"

namespace lagdisp {

namespace {

using ojson = nlohmann::ordered_json;

ojson cell_to_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> ojson {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return format_double(v);
                return v;
            } else {
                return v;
            }
        },
        c);
}

Cell cell_from_json(const ojson& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        return s;
    }
    throw UsageError("record_from_json: unsupported cell type");
}

// NaN-aware equality so a record equals its own round trip
bool cell_equal(const Cell& a, const Cell& b) {
    if (a.index() != b.index()) return false;
    if (const auto* x = std::get_if<double>(&a)) {
        const double y = std::get<double>(b);
        return (std::isnan(*x) && std::isnan(y)) || *x == y;
    }
    return a == b;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

bool operator==(const ResultRecord& a, const ResultRecord& b) {
    if (a.command != b.command || a.inputs != b.inputs || a.columns != b.columns) return false;
    if (a.rows.size() != b.rows.size() || a.summary.size() != b.summary.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].size() != b.rows[i].size()) return false;
        for (std::size_t j = 0; j < a.rows[i].size(); ++j)
            if (!cell_equal(a.rows[i][j], b.rows[i][j])) return false;
    }
    for (std::size_t i = 0; i < a.summary.size(); ++i)
        if (a.summary[i].first != b.summary[i].first || !cell_equal(a.summary[i].second, b.summary[i].second))
            return false;
    return true;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return format_double(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::string>)
                return v;
            else
                return std::to_string(v);
        },
        c);
}

std::string to_csv(const ResultRecord& r) {
    std::ostringstream os;
    os << "# lagdisp " << kVersion << " " << r.command;
    for (const auto& [k, v] : r.inputs) os << " " << k << "=" << v;
    os << "\n";
    for (std::size_t j = 0; j < r.columns.size(); ++j) os << (j ? "," : "") << csv_escape(r.columns[j]);
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_escape(format_cell(row[j]));
        os << "\n";
    }
    for (const auto& [k, v] : r.summary) os << "# " << k << "=" << format_cell(v) << "\n";
    return os.str();
}

std::string to_json(const ResultRecord& r) {
    ojson j;
    j["version"] = kVersion;
    j["command"] = r.command;
    ojson inputs = ojson::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["columns"] = r.columns;
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
        ojson jr = ojson::array();
        for (const auto& c : row) jr.push_back(cell_to_json(c));
        rows.push_back(jr);
    }
    j["rows"] = rows;
    ojson summary = ojson::object();
    for (const auto& [k, v] : r.summary) summary[k] = cell_to_json(v);
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

ResultRecord record_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("record_from_json: ") + e.what());
    }
    ResultRecord r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
    r.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& jr : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& c : jr) row.push_back(cell_from_json(c));
        r.rows.push_back(std::move(row));
    }
    for (const auto& [k, v] : j.at("summary").items()) r.summary.emplace_back(k, cell_from_json(v));
    return r;
}

}  // namespace lagdisp
