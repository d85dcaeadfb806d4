// Copyright 2026 The wgsqueeze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wgsqueeze/cli/emit.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace wgs::cli {

namespace {

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json to_json(const Cell &cell) {
    return std::visit(
        [](const auto &v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) {
                    return nullptr;
                }
            }
            return v;
        },
        cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table " + name + ": row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string &column) const {
    for (std::size_t i = 0; i < columns.size(); i++) {
        if (columns[i] == column) {
            return i;
        }
    }
    throw std::out_of_range("table " + name + " has no column " + column);
}

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    std::array<char, 32> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf.data(), end);
}

std::string format_cell(const Cell &cell) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return v;
            }
        },
        cell);
}

std::string render_csv(const Table &table, const Provenance &provenance) {
    std::string out;
    out += "# tool: wgsqueeze " + std::string(kToolVersion) + "\n";
    out += "# command: " + provenance.command + "\n";
    out += "# config_hash: " + hex64(provenance.config_hash) + "\n";
    out += "# formulas: " + provenance.formulas + "\n";
    for (std::size_t i = 0; i < table.columns.size(); i++) {
        out += (i ? "," : "") + csv_escape(table.columns[i]);
    }
    out += "\n";
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); i++) {
            out += (i ? "," : "") + csv_escape(format_cell(row[i]));
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const Table &table, const Provenance &provenance) {
    nlohmann::ordered_json doc;
    doc["provenance"] = {
        {"tool", "wgsqueeze"},
        {"version", kToolVersion},
        {"command", provenance.command},
        {"config_hash", hex64(provenance.config_hash)},
        {"formulas", provenance.formulas},
    };
    doc["name"] = table.name;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto &cell : row) {
            r.push_back(to_json(cell));
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(1) + "\n";
}

std::filesystem::path write_table(const std::filesystem::path &dir, const Table &table,
                                  const Provenance &provenance, OutputFormat format) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    const bool csv = format == OutputFormat::Csv;
    const std::filesystem::path path = dir / (table.name + (csv ? ".csv" : ".json"));
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f << (csv ? render_csv(table, provenance) : render_json(table, provenance));
    if (!f) {
        throw std::runtime_error("write to " + path.string() + " failed");
    }
    return path;
}

}  // namespace wgs::cli
