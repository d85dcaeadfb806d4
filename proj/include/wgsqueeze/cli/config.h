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

#ifndef WGSQUEEZE_CLI_CONFIG_H
#define WGSQUEEZE_CLI_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wgsqueeze/cli/emit.h"
#include "wgsqueeze/core.h"

namespace wgs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { ClusterScan, CompleteScan, Tables, Metrology, OracleCheck };
std::string_view to_string(Command command);

struct RunConfig {
    Command command = Command::ClusterScan;
    std::optional<Family> family;
    std::vector<ChannelKind> channels;
    std::vector<double> two_gamma_ts;
    std::string n_grid_spec;
    std::vector<int> n_grid;
    std::optional<double> alpha;
    std::optional<double> phi;
    std::filesystem::path output_dir = "out";
    OutputFormat format = OutputFormat::Csv;
    FormulaSet formulas = FormulaSet::Printed;
    double noise_max = 2;
    int noise_points = 201;
    int alpha_samples = 361;

    /// (kind, 2 gamma t) pairs in list order; the noiseless channel appears once at 0.
    std::vector<ChannelSetting> channel_settings() const;
};

/// Fills unset lists with the per-command defaults and validates the result.
/// Throws ConfigError.
RunConfig with_defaults(RunConfig config);

/// "lin:lo:hi[:step]", "log:lo:hi:count" or a comma list "2,3,4".
std::vector<int> parse_n_grid(std::string_view spec);

/// Canonical text of every setting that affects output contents. The output
/// directory is deliberately excluded so that identical runs into different
/// directories agree byte for byte.
std::string canonical_string(const RunConfig &config);
/// 64-bit FNV-1a of canonical_string.
std::uint64_t config_hash(const RunConfig &config);

struct ParseOutcome {
    std::optional<RunConfig> config;  // empty when the process should exit now
    int exit_code = kExitOk;
};

/// Parses the command line with CLI11. `--config FILE` reads flat key=value
/// lines whose keys are the long option names; flags override the file.
ParseOutcome parse_command_line(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace wgs::cli

#endif
