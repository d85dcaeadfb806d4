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

#ifndef WGSQUEEZE_CLI_COMMANDS_H
#define WGSQUEEZE_CLI_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

#include "wgsqueeze/cli/config.h"
#include "wgsqueeze/cli/emit.h"

namespace wgs::cli {

struct CommandOutput {
    std::vector<Table> tables;
    /// Set by oracle-check when a fully-connected case fails under both formula sets.
    bool assertion_failed = false;
    std::vector<std::string> notes;
};

// Each command is a pure function of its config; nothing touches the filesystem.

/// cluster_alpha, cluster_phi, cluster_noise, cluster_threshold.
CommandOutput cmd_cluster_scan(const RunConfig &config);
/// complete_scan, complete_fits.
CommandOutput cmd_complete_scan(const RunConfig &config);
/// table_<channel> per channel, tables_diff, tables_cross.
CommandOutput cmd_tables(const RunConfig &config);
/// metrology_series, metrology_fits, metrology_readout.
CommandOutput cmd_metrology(const RunConfig &config);
/// oracle_check, oracle_errata, oracle_topology, oracle_damping_frames, oracle_guard.
CommandOutput cmd_oracle_check(const RunConfig &config);

CommandOutput run_command(const RunConfig &config);

Provenance provenance_for(const RunConfig &config);

/// Writes every table into config.output_dir and lists the paths on `log`.
void write_outputs(const RunConfig &config, const CommandOutput &output, std::ostream &log);

/// Full entry point: parse, run, write. Returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace wgs::cli

#endif
