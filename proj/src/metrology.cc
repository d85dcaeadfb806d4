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

#include "wgsqueeze/metrology.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wgs {

namespace {

constexpr double kExponentTolerance = 0.02;

void check_n(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("N must be >= 1");
    }
}

}  // namespace

double phase_error(double xi2, int n_qubits) {
    check_n(n_qubits);
    if (!(xi2 > 0)) {
        throw std::invalid_argument("xi2 must be positive");
    }
    return xi2 / std::sqrt(static_cast<double>(n_qubits));
}

double ghz_phase_error(int n_qubits, double gamma_t) {
    check_n(n_qubits);
    if (gamma_t == 0) {
        throw UndefinedBaselineError("decohered GHZ baseline is undefined at gamma*t = 0");
    }
    if (!(gamma_t > 0)) {
        throw std::invalid_argument("gamma*t must be positive");
    }
    return std::sqrt(2 * gamma_t * std::numbers::e) / std::sqrt(static_cast<double>(n_qubits));
}

double shot_noise_phase_error(int n_qubits) {
    check_n(n_qubits);
    return 1 / std::sqrt(static_cast<double>(n_qubits));
}

double heisenberg_phase_error(int n_qubits) {
    check_n(n_qubits);
    return 1.0 / n_qubits;
}

double improvement_P(double xi2, double gamma_t) {
    if (!(xi2 > 0) || !(gamma_t > 0)) {
        throw std::invalid_argument("improvement_P needs xi2 > 0 and gamma*t > 0");
    }
    return std::sqrt(2 * gamma_t * std::numbers::e) / xi2;
}

std::string_view to_string(ScalingClass c) {
    switch (c) {
        case ScalingClass::SubClassical:
            return "sub-classical";
        case ScalingClass::Classical:
            return "classical";
        case ScalingClass::Intermediate:
            return "intermediate";
        case ScalingClass::Heisenberg:
            return "Heisenberg";
    }
    return "?";
}

ScalingClass classify_exponent(double varsigma) {
    if (std::abs(varsigma - 0.5) <= kExponentTolerance) {
        return ScalingClass::Classical;
    }
    if (std::abs(varsigma - 1) <= kExponentTolerance) {
        return ScalingClass::Heisenberg;
    }
    if (varsigma < 0.5) {
        return ScalingClass::SubClassical;
    }
    // Beyond 1 cannot happen for physical states; lump it with the nearest tag.
    return varsigma > 1 ? ScalingClass::Heisenberg : ScalingClass::Intermediate;
}

SensitivityFit sensitivity_exponent(std::span<const PhasePoint> points) {
    std::vector<double> n, dphi;
    for (const auto &p : points) {
        n.push_back(p.n_qubits);
        dphi.push_back(p.delta_phi);
    }
    SensitivityFit out;
    out.fit = fit_log_log(n, dphi);
    out.varsigma = -out.fit.slope;
    out.tag = classify_exponent(out.varsigma);
    return out;
}

std::vector<MetrologyReport> metrology_series(std::span<const SweepPoint> sweep, const ChannelSetting &channel) {
    std::vector<MetrologyReport> out;
    for (const auto &p : sweep) {
        if (!p.ok) {
            continue;
        }
        MetrologyReport r;
        r.n_qubits = p.n_qubits;
        r.delta_phi = phase_error(p.xi2, p.n_qubits);
        r.delta_phi_shot = shot_noise_phase_error(p.n_qubits);
        r.delta_phi_heisenberg = heisenberg_phase_error(p.n_qubits);
        r.channel = channel;
        if (channel.gamma_t() > 0) {
            r.delta_phi_ghz = ghz_phase_error(p.n_qubits, channel.gamma_t());
            r.improvement_p = improvement_P(p.xi2, channel.gamma_t());
        }
        out.push_back(r);
    }
    return out;
}

std::optional<int> improvement_crossover(std::span<const MetrologyReport> series) {
    if (series.empty() || !series.front().improvement_p || *series.front().improvement_p >= 1) {
        return std::nullopt;
    }
    std::size_t i = 0;
    while (i < series.size() && series[i].improvement_p && *series[i].improvement_p < 1) {
        i++;
    }
    if (i == series.size()) {
        return std::nullopt;
    }
    for (std::size_t k = i; k < series.size(); k++) {
        if (!series[k].improvement_p || *series[k].improvement_p <= 1) {
            return std::nullopt;
        }
    }
    return series[i - 1].n_qubits;
}

}  // namespace wgs
