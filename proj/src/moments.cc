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

#include "wgsqueeze/moments.h"

#include <cmath>
#include <complex>
#include <vector>

namespace wgs {

namespace {

using cd = std::complex<double>;

cd ipow(cd z, std::size_t n) {
    cd r = 1;
    while (n > 0) {
        if (n & 1) {
            r *= z;
        }
        z *= z;
        n >>= 1;
    }
    return r;
}

// Average phase picked up when a third qubit in |+> is down: (1 + e^{-iw}) / 2.
cd half_sum(double w) {
    return (1.0 + std::polar(1.0, -w)) / 2.0;
}

// Per-qubit covariance from a representative single-qubit vector and
// symmetric pair classes: 1/4 [(I - m m^T) + sum_c mult_c (sym(K_c) - m m^T)].
struct PairClass {
    Eigen::Matrix3d k;
    double multiplicity;
};

SpinMoments assemble(const Eigen::Vector3d &m, std::span<const PairClass> classes) {
    SpinMoments out;
    out.mean = m / 2;
    Eigen::Matrix3d mm = m * m.transpose();
    Eigen::Matrix3d cov = Eigen::Matrix3d::Identity() - mm;
    for (const auto &c : classes) {
        cov += c.multiplicity * (0.5 * (c.k + c.k.transpose()) - mm);
    }
    out.covariance = cov / 4;
    return out;
}

}  // namespace

Eigen::Matrix4d pauli_transfer_matrix(const ChannelSetting &channel) {
    Eigen::Matrix4d r = Eigen::Matrix4d::Identity();
    double u = std::exp(-channel.gamma_t());
    switch (channel.kind()) {
        case ChannelKind::None:
            break;
        case ChannelKind::Dephasing:
            r(1, 1) = r(2, 2) = u;
            break;
        case ChannelKind::Depolarizing:
            r(1, 1) = r(2, 2) = r(3, 3) = u;
            break;
        case ChannelKind::Damping:
            // |up> decays to |down>, so sz relaxes toward -1.
            r(1, 1) = r(2, 2) = std::sqrt(u);
            r(3, 3) = u;
            r(3, 0) = -(1 - u);
            break;
    }
    return r;
}

PauliVector graph_single_moments(std::span<const RestCoupling> rest) {
    cd t = 0.5;
    for (const auto &c : rest) {
        t *= ipow(half_sum(c.to_j), c.count);
    }
    return {1, 2 * t.real(), 2 * t.imag(), 0};
}

PauliTable graph_pair_moments(double w_jk, std::span<const RestCoupling> rest) {
    cd fj = 1, fk = 1, fsum = 1, fdiff = 1;
    for (const auto &c : rest) {
        fj *= ipow(half_sum(c.to_j), c.count);
        fk *= ipow(half_sum(c.to_k), c.count);
        fsum *= ipow(half_sum(c.to_j + c.to_k), c.count);
        fdiff *= ipow(half_sum(c.to_j - c.to_k), c.count);
    }
    cd phase = std::polar(1.0, -w_jk);
    // With T = |up><down|: <T_j>, <T_j T_k>, <T_j T_k^dag>, <T_j sz_k>, <sz_j T_k>.
    cd tj = 0.5 * half_sum(w_jk) * fj;
    cd tk = 0.5 * half_sum(w_jk) * fk;
    cd p = 0.25 * phase * fsum;
    cd q = 0.25 * fdiff;
    cd zjk = 0.25 * (1.0 - phase) * fj;
    cd zkj = 0.25 * (1.0 - phase) * fk;

    PauliTable g = PauliTable::Zero();
    g(0, 0) = 1;
    g(1, 0) = 2 * tj.real();
    g(2, 0) = 2 * tj.imag();
    g(0, 1) = 2 * tk.real();
    g(0, 2) = 2 * tk.imag();
    g(1, 1) = 2 * (p.real() + q.real());
    g(1, 2) = 2 * (p.imag() - q.imag());
    g(2, 1) = 2 * (p.imag() + q.imag());
    g(2, 2) = 2 * (q.real() - p.real());
    g(1, 3) = 2 * zjk.real();
    g(2, 3) = 2 * zjk.imag();
    g(3, 1) = 2 * zkj.real();
    g(3, 2) = 2 * zkj.imag();
    return g;
}

SpinMoments graph_spin_moments(const GraphSpec &graph, const ChannelSetting &channel) {
    const std::size_t n = graph.n_qubits();
    const Eigen::Matrix4d r = pauli_transfer_matrix(channel);

    std::vector<Eigen::Vector3d> singles(n);
    std::vector<RestCoupling> rest;
    for (std::size_t j = 0; j < n; j++) {
        rest.clear();
        for (std::size_t l = 0; l < n; l++) {
            if (l != j) {
                rest.push_back({graph.weight(j, l), 0, 1});
            }
        }
        PauliVector v = r * graph_single_moments(rest);
        singles[j] = v.tail<3>();
    }

    Eigen::Vector3d total_mean = Eigen::Vector3d::Zero();
    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (std::size_t j = 0; j < n; j++) {
        total_mean += singles[j];
        cov += Eigen::Matrix3d::Identity() - singles[j] * singles[j].transpose();
    }
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = j + 1; k < n; k++) {
            rest.clear();
            for (std::size_t l = 0; l < n; l++) {
                if (l != j && l != k) {
                    rest.push_back({graph.weight(j, l), graph.weight(k, l), 1});
                }
            }
            PauliTable g = r * graph_pair_moments(graph.weight(j, k), rest) * r.transpose();
            Eigen::Matrix3d c = g.bottomRightCorner<3, 3>() - singles[j] * singles[k].transpose();
            cov += c + c.transpose();
        }
    }
    SpinMoments out;
    out.mean = total_mean / (2.0 * n);
    out.covariance = cov / (4.0 * n);
    return out;
}

SpinMoments complete_family_moments(int n_qubits, double alpha, const ChannelSetting &channel) {
    if (n_qubits < 2) {
        throw std::invalid_argument("complete family needs n_qubits >= 2");
    }
    const Eigen::Matrix4d r = pauli_transfer_matrix(channel);
    const double w = 2 * alpha;
    const std::size_t n = static_cast<std::size_t>(n_qubits);

    RestCoupling single_rest[] = {{w, 0, n - 1}};
    Eigen::Vector3d m = (r * graph_single_moments(single_rest)).tail<3>();

    RestCoupling pair_rest[] = {{w, w, n - 2}};
    PauliTable g = r * graph_pair_moments(w, pair_rest) * r.transpose();
    PairClass classes[] = {{g.bottomRightCorner<3, 3>(), static_cast<double>(n - 1)}};
    return assemble(m, classes);
}

SpinMoments ring_bulk_moments(double alpha, const ChannelSetting &channel) {
    const Eigen::Matrix4d r = pauli_transfer_matrix(channel);

    RestCoupling single_rest[] = {{alpha, 0, 2}};
    Eigen::Vector3d m = (r * graph_single_moments(single_rest)).tail<3>();

    // Nearest neighbours (j, j+1): j-1 touches only j, j+2 touches only k.
    RestCoupling near_rest[] = {{alpha, 0, 1}, {0, alpha, 1}};
    PauliTable g1 = r * graph_pair_moments(alpha, near_rest) * r.transpose();
    // Next-nearest (j, j+2): j+1 is shared, j-1 and j+3 touch one side each.
    RestCoupling next_rest[] = {{alpha, alpha, 1}, {alpha, 0, 1}, {0, alpha, 1}};
    PauliTable g2 = r * graph_pair_moments(0, next_rest) * r.transpose();

    PairClass classes[] = {{g1.bottomRightCorner<3, 3>(), 2}, {g2.bottomRightCorner<3, 3>(), 2}};
    return assemble(m, classes);
}

double xi2_sq_along(const SpinMoments &m, const BlochVector &direction) {
    double mean_sq = m.mean.squaredNorm();
    if (mean_sq < 1e-24) {
        throw SingularMeanSpinError("per-qubit mean spin vanishes");
    }
    Eigen::Vector3d d(direction.x, direction.y, direction.z);
    return d.dot(m.covariance * d) / mean_sq;
}

PlaneMinimum xi2_sq_plane_minimum(const SpinMoments &m) {
    double mean_sq = m.mean.squaredNorm();
    if (mean_sq < 1e-24) {
        throw SingularMeanSpinError("per-qubit mean spin vanishes");
    }
    PerpendicularFrame f = perpendicular_frame({m.mean.x(), m.mean.y(), m.mean.z()});
    Eigen::Vector3d e1(f.e1.x, f.e1.y, f.e1.z);
    Eigen::Vector3d e2(f.e2.x, f.e2.y, f.e2.z);
    double a = e1.dot(m.covariance * e1);
    double d = e2.dot(m.covariance * e2);
    double b = e1.dot(m.covariance * e2);
    double lambda = (a + d) / 2 - std::sqrt((a - d) * (a - d) / 4 + b * b);
    double phi = 0.5 * std::atan2(2 * b, a - d) + kPi / 2;
    if (phi > kPi / 2) {
        phi -= kPi;
    }
    return {std::max(lambda, 0.0) / mean_sq, phi};
}

}  // namespace wgs
