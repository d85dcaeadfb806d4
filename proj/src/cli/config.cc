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

#include "wgsqueeze/cli/config.h"

#include <charconv>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"
#include "wgsqueeze/sweep.h"

namespace wgs::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

int parse_int(std::string_view s, std::string_view context) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("bad integer '" + std::string(s) + "' in " + std::string(context));
    }
    return v;
}

double parse_double(std::string_view s, std::string_view context) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("bad number '" + std::string(s) + "' in " + std::string(context));
    }
    return v;
}

Family required_family(Command c) {
    return c == Command::ClusterScan ? Family::Cluster : Family::Complete;
}

}  // namespace

std::string_view to_string(Command command) {
    switch (command) {
        case Command::ClusterScan:
            return "cluster-scan";
        case Command::CompleteScan:
            return "complete-scan";
        case Command::Tables:
            return "tables";
        case Command::Metrology:
            return "metrology";
        case Command::OracleCheck:
            return "oracle-check";
    }
    return "?";
}

std::vector<ChannelSetting> RunConfig::channel_settings() const {
    std::vector<ChannelSetting> out;
    for (ChannelKind kind : channels) {
        if (kind == ChannelKind::None) {
            out.push_back(ChannelSetting::none());
            continue;
        }
        for (double tg : two_gamma_ts) {
            out.push_back(ChannelSetting::from_two_gamma_t(kind, tg));
        }
    }
    return out;
}

std::vector<int> parse_n_grid(std::string_view spec) {
    const std::string context = "n-grid '" + std::string(spec) + "'";
    std::vector<int> grid;
    try {
        if (spec.starts_with("lin:")) {
            auto p = split(spec.substr(4), ':');
            if (p.size() != 2 && p.size() != 3) {
                throw ConfigError(context + ": expected lin:lo:hi[:step]");
            }
            grid = linear_grid(parse_int(p[0], context), parse_int(p[1], context),
                               p.size() == 3 ? parse_int(p[2], context) : 1);
        } else if (spec.starts_with("log:")) {
            auto p = split(spec.substr(4), ':');
            if (p.size() != 3) {
                throw ConfigError(context + ": expected log:lo:hi:count");
            }
            grid = log_grid(parse_int(p[0], context), parse_int(p[1], context), parse_int(p[2], context));
        } else {
            for (auto part : split(spec, ',')) {
                grid.push_back(parse_int(part, context));
            }
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(context + ": " + e.what());
    }
    if (grid.empty()) {
        throw ConfigError(context + " is empty");
    }
    for (std::size_t i = 0; i < grid.size(); i++) {
        if (grid[i] < 2) {
            throw ConfigError(context + ": N must be >= 2");
        }
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw ConfigError(context + ": N values must be strictly increasing");
        }
    }
    return grid;
}

RunConfig with_defaults(RunConfig c) {
    if (c.family && *c.family != required_family(c.command) && c.command != Command::OracleCheck) {
        throw ConfigError(std::string(to_string(c.command)) + " works on the " +
                          std::string(to_string(required_family(c.command))) + " family only");
    }
    if (!c.family && c.command != Command::OracleCheck) {
        c.family = required_family(c.command);
    }
    if (c.channels.empty()) {
        switch (c.command) {
            case Command::Tables:
                c.channels = {ChannelKind::Dephasing, ChannelKind::Depolarizing, ChannelKind::Damping};
                break;
            case Command::Metrology:
                c.channels = {ChannelKind::None, ChannelKind::Dephasing, ChannelKind::Depolarizing};
                break;
            default:
                c.channels = {ChannelKind::None, ChannelKind::Dephasing, ChannelKind::Depolarizing,
                              ChannelKind::Damping};
        }
    }
    if (c.two_gamma_ts.empty()) {
        if (c.command == Command::OracleCheck) {
            c.two_gamma_ts = {0.25, 1};
        } else {
            c.two_gamma_ts = {0, 0.25, 0.5, 0.75, 1};
        }
    }
    for (double tg : c.two_gamma_ts) {
        if (!std::isfinite(tg) || tg < 0) {
            throw ConfigError("two-gamma-t values must be finite and non-negative");
        }
    }
    if (c.n_grid_spec.empty()) {
        c.n_grid_spec = c.command == Command::OracleCheck ? "lin:2:6" : "lin:2:1000";
    }
    c.n_grid = parse_n_grid(c.n_grid_spec);
    if ((c.alpha && !std::isfinite(*c.alpha)) || (c.phi && !std::isfinite(*c.phi))) {
        throw ConfigError("alpha and phi overrides must be finite");
    }
    if (!(c.noise_max > 0) || !std::isfinite(c.noise_max)) {
        throw ConfigError("noise-max must be positive");
    }
    if (c.noise_points < 2) {
        throw ConfigError("noise-points must be >= 2");
    }
    if (c.alpha_samples < 3) {
        throw ConfigError("alpha-samples must be >= 3");
    }
    if (c.output_dir.empty()) {
        throw ConfigError("output directory is empty");
    }
    return c;
}

std::string canonical_string(const RunConfig &c) {
    std::string s;
    s += "command=" + std::string(to_string(c.command)) + "\n";
    s += "family=" + (c.family ? std::string(to_string(*c.family)) : std::string("-")) + "\n";
    s += "channel=";
    for (std::size_t i = 0; i < c.channels.size(); i++) {
        s += (i ? "," : "") + std::string(to_string(c.channels[i]));
    }
    s += "\ntwo-gamma-t=";
    for (std::size_t i = 0; i < c.two_gamma_ts.size(); i++) {
        s += (i ? "," : "") + format_number(c.two_gamma_ts[i]);
    }
    s += "\nn-grid=" + c.n_grid_spec + "\n";
    s += "alpha=" + (c.alpha ? format_number(*c.alpha) : std::string("-")) + "\n";
    s += "phi=" + (c.phi ? format_number(*c.phi) : std::string("-")) + "\n";
    s += "format=" + std::string(c.format == OutputFormat::Csv ? "csv" : "json") + "\n";
    s += "formulas=" + std::string(to_string(c.formulas)) + "\n";
    s += "noise-max=" + format_number(c.noise_max) + "\n";
    s += "noise-points=" + std::to_string(c.noise_points) + "\n";
    s += "alpha-samples=" + std::to_string(c.alpha_samples) + "\n";
    return s;
}

std::uint64_t config_hash(const RunConfig &config) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : canonical_string(config)) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

ParseOutcome parse_command_line(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Spin squeezing of weighted graph states under local noise", "wgsqueeze"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value file; keys are long option names");
    app.set_version_flag("--version", kToolVersion);

    std::string family;
    std::vector<std::string> channels;
    std::vector<std::string> two_gamma_ts;
    std::string n_grid;
    std::optional<double> alpha;
    std::optional<double> phi;
    std::string output_dir = "out";
    std::string format = "csv";
    bool printed = false;
    bool corrected = false;
    double noise_max = 2;
    int noise_points = 201;
    int alpha_samples = 361;

    app.add_option("--family", family, "cluster or complete");
    app.add_option("--channel", channels, "none, dephasing, depolarizing, damping (list)")->delimiter(',');
    app.add_option("--two-gamma-t", two_gamma_ts, "Noise strengths 2*gamma*t (list)")->delimiter(',');
    app.add_option("--n-grid", n_grid, "lin:lo:hi[:step], log:lo:hi:count or a comma list");
    app.add_option("--alpha", alpha, "Fix alpha instead of optimizing it");
    app.add_option("--phi", phi, "Fix phi instead of optimizing it (cluster)");
    app.add_option("--out", output_dir, "Output directory");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    auto *p = app.add_flag("--printed-formulas", printed, "Closed forms as stated in the literature (default)");
    auto *q = app.add_flag("--corrected-formulas", corrected, "Closed forms reconciled with the oracle");
    p->excludes(q);
    app.add_option("--noise-max", noise_max, "Upper 2*gamma*t of the cluster noise series");
    app.add_option("--noise-points", noise_points, "Points in the cluster noise series");
    app.add_option("--alpha-samples", alpha_samples, "Points in the cluster alpha and phi series");

    Command command = Command::ClusterScan;
    const std::pair<Command, const char *> subcommands[] = {
        {Command::ClusterScan, "Cluster xi_2 against alpha, phi and noise"},
        {Command::CompleteScan, "Optimized fully-connected xi_2 against N, with power-law fits"},
        {Command::Tables, "Regression tables and their comparison with the reference values"},
        {Command::Metrology, "Phase error, decohered-GHZ baseline and improvement factor"},
        {Command::OracleCheck, "Closed forms against the dense density-matrix oracle"},
    };
    for (const auto &[cmd, description] : subcommands) {
        app.add_subcommand(std::string(to_string(cmd)), description)->callback([&command, cmd = cmd] {
            command = cmd;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? kExitOk : kExitConfig};
    }

    try {
        RunConfig c;
        c.command = command;
        if (!family.empty()) {
            c.family = parse_family(family);
            if (!c.family) {
                throw ConfigError("unknown family '" + family + "'");
            }
        }
        for (const auto &name : channels) {
            auto kind = parse_channel_kind(name);
            if (!kind) {
                throw ConfigError("unknown channel '" + name + "'");
            }
            c.channels.push_back(*kind);
        }
        for (const auto &text : two_gamma_ts) {
            c.two_gamma_ts.push_back(parse_double(text, "two-gamma-t"));
        }
        c.n_grid_spec = n_grid;
        c.alpha = alpha;
        c.phi = phi;
        c.output_dir = output_dir;
        c.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        c.formulas = corrected ? FormulaSet::Corrected : FormulaSet::Printed;
        c.noise_max = noise_max;
        c.noise_points = noise_points;
        c.alpha_samples = alpha_samples;
        return {with_defaults(std::move(c)), kExitOk};
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return {std::nullopt, kExitConfig};
    }
}

}  // namespace wgs::cli
