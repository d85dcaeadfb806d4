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

#include "wgsqueeze/closedform.h"

#include <cmath>
#include <string>

#include "wgsqueeze/moments.h"

namespace wgs {

namespace {

constexpr double kPoleThreshold = 1e-300;

double checked_ratio(double numerator, double denominator, const char *what) {
    if (!(std::abs(denominator) >= kPoleThreshold)) {
        throw PoleError(std::string(what) + ": denominator " + std::to_string(denominator) + " is at a pole");
    }
    return numerator / denominator;
}

// Noise scalings of the printed cluster numerator: (cos^2 phi term, sin 2phi term).
struct ClusterScales {
    double c;
    double s;
};

ClusterScales printed_cluster_scales(const ChannelSetting &channel) {
    double u = std::exp(-channel.gamma_t());
    switch (channel.kind()) {
        case ChannelKind::None:
            return {1, 1};
        case ChannelKind::Dephasing:
        case ChannelKind::Depolarizing:
            return {u * u, u};
        case ChannelKind::Damping:
            return {u, u};
    }
    return {1, 1};
}

double printed_cluster_denominator(double alpha, const ChannelSetting &channel) {
    double u = std::exp(-channel.gamma_t());
    double half = std::cos(alpha / 2);
    double half4 = half * half * half * half;
    switch (channel.kind()) {
        case ChannelKind::None:
        case ChannelKind::Dephasing:
            return half4;
        case ChannelKind::Depolarizing:
            return u * u * half4;
        case ChannelKind::Damping: {
            double d = 1 + u * (half * half - 1);
            return d * d;
        }
    }
    return half4;
}

}  // namespace

double cluster_xi2_sq(const ClusterParams &p, const ChannelSetting &channel, FormulaSet formulas) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.phi)) {
        throw std::invalid_argument("cluster parameters must be finite");
    }
    if (formulas == FormulaSet::Corrected) {
        SpinMoments m = ring_bulk_moments(p.alpha, channel);
        BlochVector mean{m.mean.x(), m.mean.y(), m.mean.z()};
        return xi2_sq_along(m, perpendicular_direction(mean, p.phi));
    }
    ClusterScales k = printed_cluster_scales(channel);
    double sa = std::sin(p.alpha);
    double cphi = std::cos(p.phi);
    double numerator = 1 + k.c * cphi * cphi * sa * sa / 2 + k.s * std::sin(2 * p.phi) * sa;
    return checked_ratio(numerator, printed_cluster_denominator(p.alpha, channel), "cluster xi2");
}

PhiMinimum cluster_min_over_phi(double alpha, const ChannelSetting &channel, FormulaSet formulas) {
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be finite");
    }
    if (formulas == FormulaSet::Corrected) {
        PlaneMinimum pm = xi2_sq_plane_minimum(ring_bulk_moments(alpha, channel));
        return {pm.phi, pm.xi2_sq};
    }
    ClusterScales k = printed_cluster_scales(channel);
    double sa = std::sin(alpha);
    double c = k.c * sa * sa / 2;
    double s = k.s * sa;
    // c cos^2 phi + s sin 2phi = c/2 + (c/2) cos 2phi + s sin 2phi.
    double phi = 0;
    if (c != 0 || s != 0) {
        phi = 0.5 * (std::atan2(s, c / 2) + kPi);
        if (phi > kPi / 2) {
            phi -= kPi;
        }
    }
    double numerator = 1 + c / 2 - std::sqrt(c * c / 4 + s * s);
    return {phi, checked_ratio(numerator, printed_cluster_denominator(alpha, channel), "cluster xi2")};
}

double cluster_optimal_phi(double alpha, const ChannelSetting &channel, FormulaSet formulas) {
    return cluster_min_over_phi(alpha, channel, formulas).phi;
}

CompleteAB complete_AB(int n_qubits, double alpha) {
    if (n_qubits < 2) {
        throw std::invalid_argument("complete family needs n_qubits >= 2");
    }
    double p = n_qubits - 2;
    return {1 - std::pow(std::cos(2 * alpha), p), 4 * std::sin(alpha) * std::pow(std::cos(alpha), p)};
}

double complete_xi2_sq(const CompleteParams &p, const ChannelSetting &channel, const FormulaOptions &options) {
    if (p.n_qubits < 2) {
        throw std::invalid_argument("complete family needs n_qubits >= 2");
    }
    if (!std::isfinite(p.alpha)) {
        throw std::invalid_argument("alpha must be finite");
    }
    if (options.formulas == FormulaSet::Corrected) {
        return xi2_sq_plane_minimum(complete_family_moments(p.n_qubits, p.alpha, channel)).xi2_sq;
    }

    const double n1 = p.n_qubits - 1;
    const double u = std::exp(-channel.gamma_t());
    const CompleteAB ab = complete_AB(p.n_qubits, p.alpha);
    const double r = std::hypot(ab.a, ab.b);
    const double cos_pow = std::pow(std::cos(p.alpha), 2 * n1);

    if (channel.kind() == ChannelKind::None) {
        return checked_ratio(1 - n1 * (r - ab.a) / 4, cos_pow, "complete xi2");
    }

    double numerator = 1;
    if (r == 0) {
        if (!options.zero_limit) {
            throw IndeterminateError("A = B = 0: noise terms are 0/0");
        }
    } else {
        double in_plane = channel.kind() == ChannelKind::Damping ? u : u * u;
        numerator += in_plane * n1 * (ab.a - ab.a * ab.a / r) / 4 - u * n1 * ab.b * ab.b / r / 4;
    }

    double denominator = cos_pow;
    if (channel.kind() == ChannelKind::Depolarizing) {
        denominator = u * u * cos_pow;
    } else if (channel.kind() == ChannelKind::Damping) {
        double d = u * std::pow(std::cos(p.alpha), n1) - (1 - u);
        denominator = d * d;
    }
    return checked_ratio(numerator, denominator, "complete xi2");
}

}  // namespace wgs
