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

#include "wgsqueeze/core.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace wgs {

double reduce_angle(double radians) {
    if (!std::isfinite(radians)) {
        throw std::invalid_argument("angle must be finite");
    }
    double r = std::fmod(radians, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod of a value just below a multiple of 2*pi can round up to 2*pi.
    if (r >= kTwoPi) {
        r = 0;
    }
    return r;
}

GraphSpec::GraphSpec(std::size_t n_qubits, Topology topology, std::vector<Edge> edges)
    : n_qubits_(n_qubits), topology_(topology), edges_(std::move(edges)) {
    if (n_qubits_ < 1) {
        throw std::invalid_argument("graph needs at least one qubit");
    }
    for (auto &e : edges_) {
        if (e.a == e.b) {
            throw std::invalid_argument("edge connects qubit " + std::to_string(e.a) + " to itself");
        }
        if (e.a >= n_qubits_ || e.b >= n_qubits_) {
            throw std::invalid_argument("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                                        ") out of range for " + std::to_string(n_qubits_) + " qubits");
        }
        if (e.a > e.b) {
            std::swap(e.a, e.b);
        }
        e.weight = reduce_angle(e.weight);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge &l, const Edge &r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    });
    for (std::size_t i = 1; i < edges_.size(); i++) {
        if (edges_[i].a == edges_[i - 1].a && edges_[i].b == edges_[i - 1].b) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].a) + ", " +
                                        std::to_string(edges_[i].b) + ")");
        }
    }
}

GraphSpec GraphSpec::chain(std::size_t n_qubits, double alpha) {
    std::vector<Edge> edges;
    for (std::size_t j = 0; j + 1 < n_qubits; j++) {
        edges.push_back({j, j + 1, alpha});
    }
    return GraphSpec(n_qubits, Topology::Chain, std::move(edges));
}

GraphSpec GraphSpec::ring(std::size_t n_qubits, double alpha) {
    if (n_qubits < 3) {
        throw std::invalid_argument("ring needs at least 3 qubits");
    }
    std::vector<Edge> edges;
    for (std::size_t j = 0; j + 1 < n_qubits; j++) {
        edges.push_back({j, j + 1, alpha});
    }
    edges.push_back({n_qubits - 1, 0, alpha});
    return GraphSpec(n_qubits, Topology::Ring, std::move(edges));
}

GraphSpec GraphSpec::complete(std::size_t n_qubits, double alpha) {
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < n_qubits; j++) {
        for (std::size_t k = j + 1; k < n_qubits; k++) {
            edges.push_back({j, k, alpha});
        }
    }
    return GraphSpec(n_qubits, Topology::Complete, std::move(edges));
}

GraphSpec GraphSpec::custom(std::size_t n_qubits, std::vector<Edge> edges) {
    return GraphSpec(n_qubits, Topology::Custom, std::move(edges));
}

double GraphSpec::weight(std::size_t j, std::size_t k) const {
    if (j > k) {
        std::swap(j, k);
    }
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{j, k},
                               [](const Edge &e, const std::pair<std::size_t, std::size_t> &p) {
                                   return e.a != p.first ? e.a < p.first : e.b < p.second;
                               });
    if (it != edges_.end() && it->a == j && it->b == k) {
        return it->weight;
    }
    return 0;
}

GraphSpec family_graph(Family family, std::size_t n_qubits, double alpha) {
    switch (family) {
        case Family::Cluster:
            return GraphSpec::ring(n_qubits, alpha);
        case Family::Complete:
            return GraphSpec::complete(n_qubits, 2 * alpha);
    }
    throw std::invalid_argument("unknown family");
}

ChannelSetting::ChannelSetting(ChannelKind kind, double gamma_t) : kind_(kind), gamma_t_(gamma_t) {
    if (!std::isfinite(gamma_t) || gamma_t < 0) {
        throw std::invalid_argument("gamma_t must be finite and non-negative, got " + std::to_string(gamma_t));
    }
    if (kind_ == ChannelKind::None) {
        gamma_t_ = 0;
    }
}

ChannelSetting ChannelSetting::from_two_gamma_t(ChannelKind kind, double two_gamma_t) {
    return ChannelSetting(kind, two_gamma_t / 2);
}

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::None:
            return "none";
        case ChannelKind::Dephasing:
            return "dephasing";
        case ChannelKind::Depolarizing:
            return "depolarizing";
        case ChannelKind::Damping:
            return "damping";
    }
    return "?";
}

std::string_view to_string(Family family) {
    return family == Family::Cluster ? "cluster" : "complete";
}

std::string_view to_string(Topology topology) {
    switch (topology) {
        case Topology::Chain:
            return "chain";
        case Topology::Ring:
            return "ring";
        case Topology::Complete:
            return "complete";
        case Topology::Custom:
            return "custom";
    }
    return "?";
}

std::string_view to_string(FormulaSet formulas) {
    return formulas == FormulaSet::Printed ? "printed" : "corrected";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view text) {
    for (auto k : {ChannelKind::None, ChannelKind::Dephasing, ChannelKind::Depolarizing, ChannelKind::Damping}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<Family> parse_family(std::string_view text) {
    if (text == "cluster") {
        return Family::Cluster;
    }
    if (text == "complete") {
        return Family::Complete;
    }
    return std::nullopt;
}

double BlochVector::norm() const {
    return std::hypot(x, y, z);
}

BlochVector BlochVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    return *this * (1 / n);
}

BlochVector mean_spin_direction(Family family, int n_qubits, double alpha, double detuning_phase,
                                FormulaSet formulas) {
    if (n_qubits < 1) {
        throw std::invalid_argument("n_qubits must be >= 1");
    }
    if (!std::isfinite(alpha) || !std::isfinite(detuning_phase)) {
        throw std::invalid_argument("alpha and detuning phase must be finite");
    }
    double twist = alpha;
    if (family == Family::Complete) {
        if (n_qubits < 2) {
            throw std::invalid_argument("complete family needs n_qubits >= 2");
        }
        twist = (formulas == FormulaSet::Printed ? n_qubits : n_qubits - 1) * alpha;
    }
    double theta = detuning_phase - twist;
    return {std::cos(theta), std::sin(theta), 0};
}

BlochVector PerpendicularFrame::at(double phi) const {
    return e1 * std::cos(phi) + e2 * std::sin(phi);
}

PerpendicularFrame perpendicular_frame(const BlochVector &n) {
    double len = n.norm();
    if (!(len > 0)) {
        throw std::invalid_argument("perpendicular frame of a zero vector");
    }
    BlochVector u = n * (1 / len);
    if (std::abs(u.z) < 1e-9) {
        double theta = std::atan2(u.y, u.x);
        return {{-std::sin(theta), std::cos(theta), 0}, {0, 0, 1}};
    }
    // Least-aligned axis; z wins ties, then y.
    BlochVector axis{0, 0, 1};
    double best = std::abs(u.z);
    if (std::abs(u.y) < best) {
        axis = {0, 1, 0};
        best = std::abs(u.y);
    }
    if (std::abs(u.x) < best) {
        axis = {1, 0, 0};
    }
    BlochVector e2 = (axis - u * axis.dot(u)).normalized();
    BlochVector e1 = e2.cross(u).normalized();
    return {e1, e2};
}

BlochVector perpendicular_direction(const BlochVector &n, double phi) {
    return perpendicular_frame(n).at(phi);
}

double xi2_from_xi1(double xi1_sq, double mean_spin_norm, int n_qubits) {
    if (mean_spin_norm < 1e-12) {
        throw SingularMeanSpinError("mean spin norm " + std::to_string(mean_spin_norm) +
                                    " is below 1e-12; xi_2 is undefined");
    }
    if (xi1_sq < 0 || n_qubits < 1) {
        throw std::invalid_argument("xi1_sq must be >= 0 and n_qubits >= 1");
    }
    double n = n_qubits;
    return xi1_sq * n * n / (4 * mean_spin_norm * mean_spin_norm);
}

}  // namespace wgs
