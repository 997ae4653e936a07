// SPDX-License-Identifier: Apache-2.0
//
// Tabular result records and their CSV / JSON forms. Field order is fixed by
// insertion, doubles print with 17 significant digits, and nothing that
// varies between identical runs (wall time, thread count) is serialized.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lagdisp {

inline constexpr const char* kVersion = "0.1.0";

using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct ResultRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  ///< provenance, in flag order
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;

    void add_input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
    void add_summary(std::string key, Cell value) { summary.emplace_back(std::move(key), std::move(value)); }
};

bool operator==(const ResultRecord& a, const ResultRecord& b);

/// %.17g, with nan / inf / -inf spelled out.
std::string format_double(double v);
std::string format_cell(const Cell& c);

/// '#'-prefixed provenance line, header row, data rows, '#'-prefixed summary lines. LF endings.
std::string to_csv(const ResultRecord& r);

/// One object with keys version, command, inputs, columns, rows, summary.
/// Non-finite doubles become the strings "nan", "inf", "-inf".
std::string to_json(const ResultRecord& r);
ResultRecord record_from_json(const std::string& text);

}  // namespace lagdisp
