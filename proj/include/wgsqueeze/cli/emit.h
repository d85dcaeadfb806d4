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

#ifndef WGSQUEEZE_CLI_EMIT_H
#define WGSQUEEZE_CLI_EMIT_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace wgs::cli {

inline constexpr const char *kToolVersion = "1.0.0";

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
    std::string name;  // file stem
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    std::size_t column_index(const std::string &column) const;
};

struct Provenance {
    std::string command;
    std::uint64_t config_hash = 0;
    std::string formulas;
};

enum class OutputFormat { Csv, Json };

/// Shortest round-trip decimal form; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double x);
std::string format_cell(const Cell &cell);

/// CSV with '#'-prefixed provenance lines ahead of the header row.
std::string render_csv(const Table &table, const Provenance &provenance);
/// {"provenance": {...}, "columns": [...], "rows": [[...], ...]}; non-finite numbers become null.
std::string render_json(const Table &table, const Provenance &provenance);

/// Writes <dir>/<table.name>.{csv,json}, creating dir as needed, and returns
/// the path. Throws std::runtime_error naming the path on I/O failure.
std::filesystem::path write_table(const std::filesystem::path &dir, const Table &table,
                                  const Provenance &provenance, OutputFormat format);

}  // namespace wgs::cli

#endif
