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

#ifndef WGSQUEEZE_METROLOGY_H
#define WGSQUEEZE_METROLOGY_H

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wgsqueeze/core.h"
#include "wgsqueeze/sweep.h"

namespace wgs {

/// Ramsey phase error xi_2 / sqrt(N).
double phase_error(double xi2, int n_qubits);

/// Decohered-GHZ baseline sqrt(2 gamma t e) / sqrt(N). Throws
/// UndefinedBaselineError at gamma_t = 0, where the noiseless GHZ state
/// reaches 1/N instead.
double ghz_phase_error(int n_qubits, double gamma_t);

double shot_noise_phase_error(int n_qubits);
double heisenberg_phase_error(int n_qubits);

/// P = delta_phi_GHZ / delta_phi = sqrt(2 gamma t e) / xi_2.
double improvement_P(double xi2, double gamma_t);

enum class ScalingClass { SubClassical, Classical, Intermediate, Heisenberg };
std::string_view to_string(ScalingClass c);

/// Classifies an exponent against 1/2 and 1 with tolerance 0.02.
ScalingClass classify_exponent(double varsigma);

struct PhasePoint {
    int n_qubits;
    double delta_phi;
};

struct SensitivityFit {
    RegressionFit fit;  // ln delta_phi = slope ln N + intercept
    double varsigma;    // -slope
    ScalingClass tag;
};

/// Power-law fit of delta_phi against N. Needs at least three points.
SensitivityFit sensitivity_exponent(std::span<const PhasePoint> points);

struct MetrologyReport {
    int n_qubits = 0;
    double delta_phi = 0;
    /// Empty for the noiseless channel.
    std::optional<double> delta_phi_ghz;
    double delta_phi_shot = 0;
    double delta_phi_heisenberg = 0;
    std::optional<double> improvement_p;
    ChannelSetting channel;
};

/// One report per successful sweep point, all at the sweep's channel.
std::vector<MetrologyReport> metrology_series(std::span<const SweepPoint> sweep, const ChannelSetting &channel);

/// The largest N such that P < 1 at every listed N up to it and P > 1 from the
/// next point on. Empty if the series never crosses in that way.
std::optional<int> improvement_crossover(std::span<const MetrologyReport> series);

}  // namespace wgs

#endif
