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

#include "wgsqueeze/oracle.h"

#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

namespace wgs {

namespace {

using cd = std::complex<double>;

void check_density_size(int n_qubits) {
    if (n_qubits > kMaxDensityQubits) {
        throw SizeLimitError("density matrices are limited to " + std::to_string(kMaxDensityQubits) +
                             " qubits, got " + std::to_string(n_qubits));
    }
}

std::size_t bit_of(int n_qubits, int qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

// Dense J_a = (1/2) sum_q sigma_a^q.
std::array<Eigen::MatrixXcd, 3> collective_operators(int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::array<Eigen::MatrixXcd, 3> j;
    for (auto &m : j) {
        m = Eigen::MatrixXcd::Zero(dim, dim);
    }
    for (int q = 0; q < n_qubits; q++) {
        const std::size_t bit = bit_of(n_qubits, q);
        for (std::size_t i = 0; i < dim; i++) {
            const bool up = (i & bit) != 0;
            const std::size_t flipped = i ^ bit;
            // <flipped| sx |i> = 1; sy = [[0, i], [-i, 0]] so <down|sy|up> = i, <up|sy|down> = -i.
            j[0](flipped, i) += 0.5;
            j[1](flipped, i) += up ? cd(0, 0.5) : cd(0, -0.5);
            j[2](i, i) += up ? 0.5 : -0.5;
        }
    }
    return j;
}

double angle_in_half_turn(double phi) {
    while (phi > kPi / 2) {
        phi -= kPi;
    }
    while (phi <= -kPi / 2) {
        phi += kPi;
    }
    return phi;
}

SqueezingReport report_in_frame(const CollectiveMoments &mom, int n_qubits, const PerpendicularFrame &frame) {
    const Eigen::Vector3d m(mom.mean.x, mom.mean.y, mom.mean.z);
    const Eigen::Matrix3d cov = mom.second - m * m.transpose();
    Eigen::Matrix<double, 3, 2> f;
    f.col(0) << frame.e1.x, frame.e1.y, frame.e1.z;
    f.col(1) << frame.e2.x, frame.e2.y, frame.e2.z;
    const Eigen::Matrix2d c = f.transpose() * cov * f;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig;
    eig.computeDirect(c);
    const double lambda = std::max(eig.eigenvalues()(0), 0.0);
    const Eigen::Vector2d v = eig.eigenvectors().col(0);

    SqueezingReport r;
    r.mean_spin = mom.mean;
    r.xi1_sq = 4 * lambda / n_qubits;
    r.xi2_sq = xi2_from_xi1(r.xi1_sq, mom.mean.norm(), n_qubits);
    r.optimal_phi = angle_in_half_turn(std::atan2(v(1), v(0)));
    r.optimal_perp = frame.at(r.optimal_phi);
    return r;
}

}  // namespace

DensityMatrix DensityMatrix::from_pure(const PureState &state) {
    check_density_size(state.n_qubits);
    return {state.n_qubits, state.amplitudes * state.amplitudes.adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    check_density_size(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    return {n_qubits, Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim)};
}

double KrausSet::completeness_error() const {
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (std::size_t k = 0; k < ops.size(); k++) {
        sum += weight(k) * (ops[k].adjoint() * ops[k]);
    }
    return (sum - Eigen::Matrix2cd::Identity()).norm();
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, cd(0, 1), cd(0, -1), 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << -1, 0, 0, 1;
    return m;
}

PureState build_state(const GraphSpec &graph) {
    const int n = static_cast<int>(graph.n_qubits());
    if (n > kMaxPureQubits) {
        throw SizeLimitError("pure states are limited to " + std::to_string(kMaxPureQubits) + " qubits, got " +
                             std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    // Phases are summed and reduced in extended precision: the mean spin of a
    // strongly twisted state is a near-total cancellation between amplitudes,
    // and a few ulps of phase error per amplitude show up directly in xi_2^2.
    std::vector<long double> phase(dim, 0.0L);
    for (const auto &e : graph.edges()) {
        const std::size_t mask = bit_of(n, static_cast<int>(e.a)) | bit_of(n, static_cast<int>(e.b));
        for (std::size_t i = 0; i < dim; i++) {
            if ((i & mask) == 0) {
                phase[i] += e.weight;
            }
        }
    }
    const long double two_pi = 6.283185307179586476925286766559L;
    const long double amp = std::pow(2.0L, -n / 2.0L);
    PureState s{n, Eigen::VectorXcd(dim)};
    for (std::size_t i = 0; i < dim; i++) {
        const long double p = std::fmod(phase[i], two_pi);
        s.amplitudes(i) = cd(static_cast<double>(amp * std::cos(p)), static_cast<double>(-amp * std::sin(p)));
    }
    return s;
}

KrausSet kraus_for(const ChannelSetting &channel) {
    const double u = std::exp(-channel.gamma_t());
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    switch (channel.kind()) {
        case ChannelKind::None:
            return {{id}, {}};
        case ChannelKind::Dephasing: {
            // The identity goes last with weight 1 - (rest) so the weights sum to exactly 1.
            const double p3 = (1 - u) / 2;
            return {{pauli_z(), id}, {p3, 1 - p3}};
        }
        case ChannelKind::Depolarizing: {
            const double p = (1 - u) / 4;
            return {{pauli_x(), pauli_y(), pauli_z(), id}, {p, p, p, 1 - 3 * p}};
        }
        case ChannelKind::Damping: {
            Eigen::Matrix2cd e0, e1;
            e0 << 1, 0, 0, std::sqrt(u);
            e1 << 0, std::sqrt(1 - u), 0, 0;
            return {{e0, e1}, {}};
        }
    }
    return {{id}, {}};
}

DensityMatrix apply_single_qubit_kraus(const DensityMatrix &rho, const KrausSet &kraus, int qubit) {
    const int n = rho.n_qubits;
    if (qubit < 0 || qubit >= n) {
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range");
    }
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t bit = bit_of(n, qubit);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd left(dim, dim);
    for (std::size_t i = 0; i < kraus.ops.size(); i++) {
        const Eigen::Matrix2cd &k = kraus.ops[i];
        const double w = kraus.weight(i);
        // left = (K on qubit) * rho
        for (std::size_t r0 = 0; r0 < dim; r0++) {
            if (r0 & bit) {
                continue;
            }
            const std::size_t r1 = r0 | bit;
            left.row(r0) = k(0, 0) * rho.matrix.row(r0) + k(0, 1) * rho.matrix.row(r1);
            left.row(r1) = k(1, 0) * rho.matrix.row(r0) + k(1, 1) * rho.matrix.row(r1);
        }
        // out += left * (K on qubit)^dag
        for (std::size_t c0 = 0; c0 < dim; c0++) {
            if (c0 & bit) {
                continue;
            }
            const std::size_t c1 = c0 | bit;
            out.col(c0) += w * (std::conj(k(0, 0)) * left.col(c0) + std::conj(k(0, 1)) * left.col(c1));
            out.col(c1) += w * (std::conj(k(1, 0)) * left.col(c0) + std::conj(k(1, 1)) * left.col(c1));
        }
    }
    return {n, std::move(out)};
}

DensityMatrix apply_local_channel(const DensityMatrix &rho, const ChannelSetting &channel) {
    std::vector<int> order(rho.n_qubits);
    std::iota(order.begin(), order.end(), 0);
    return apply_local_channel(rho, channel, order);
}

DensityMatrix apply_local_channel(const DensityMatrix &rho, const ChannelSetting &channel,
                                  std::span<const int> qubit_order) {
    check_density_size(rho.n_qubits);
    if (channel.is_identity()) {
        return rho;
    }
    const KrausSet kraus = kraus_for(channel);
    DensityMatrix out = rho;
    for (int q : qubit_order) {
        out = apply_single_qubit_kraus(out, kraus, q);
    }
    return out;
}

DensityMatrix global_z_rotation(const DensityMatrix &rho, double phase) {
    const int n = rho.n_qubits;
    const std::size_t dim = std::size_t{1} << n;
    Eigen::VectorXcd d(dim);
    for (std::size_t i = 0; i < dim; i++) {
        double jz = 0;
        for (int q = 0; q < n; q++) {
            jz += (i & bit_of(n, q)) ? 0.5 : -0.5;
        }
        d(i) = std::polar(1.0, -phase * jz);
    }
    return {n, d.asDiagonal() * rho.matrix * d.conjugate().asDiagonal()};
}

CollectiveMoments collective_moments(const DensityMatrix &rho) {
    check_density_size(rho.n_qubits);
    const auto j = collective_operators(rho.n_qubits);
    std::array<Eigen::MatrixXcd, 3> rho_j;
    for (int a = 0; a < 3; a++) {
        rho_j[a] = rho.matrix * j[a];
    }
    // <J> can be many orders below the size of the terms it sums over (strong
    // twisting near alpha = pi/2), and xi_2^2 goes as 1/|<J>|^2, so accumulate it
    // in extended precision over the nonzeros of J.
    std::array<long double, 3> mean{};
    const Eigen::Index dim = rho.matrix.rows();
    for (int a = 0; a < 3; a++) {
        for (Eigen::Index col = 0; col < dim; col++) {
            for (Eigen::Index row = 0; row < dim; row++) {
                const cd jv = j[a](row, col);
                if (jv != cd(0)) {
                    const cd r = rho.matrix(col, row);
                    mean[a] += static_cast<long double>(r.real()) * jv.real() -
                               static_cast<long double>(r.imag()) * jv.imag();
                }
            }
        }
    }
    CollectiveMoments m;
    m.mean = {static_cast<double>(mean[0]), static_cast<double>(mean[1]), static_cast<double>(mean[2])};
    for (int a = 0; a < 3; a++) {
        for (int b = a; b < 3; b++) {
            // Tr(rho J_a J_b) = sum_ij (rho J_a)_ij (J_b)_ji
            const cd ab = (rho_j[a].array() * j[b].transpose().array()).sum();
            const cd ba = (rho_j[b].array() * j[a].transpose().array()).sum();
            m.second(a, b) = m.second(b, a) = 0.5 * (ab + ba).real();
        }
    }
    return m;
}

SqueezingReport squeezing_report(const DensityMatrix &rho) {
    const CollectiveMoments m = collective_moments(rho);
    if (m.mean.norm() < 1e-12) {
        throw SingularMeanSpinError("mean spin vanishes; xi_2 is undefined for this state");
    }
    return report_in_frame(m, rho.n_qubits, perpendicular_frame(m.mean));
}

SqueezingReport equatorial_squeezing_report(const DensityMatrix &rho) {
    const CollectiveMoments m = collective_moments(rho);
    if (m.mean.norm() < 1e-12) {
        throw SingularMeanSpinError("mean spin vanishes; xi_2 is undefined for this state");
    }
    const double theta = std::atan2(m.mean.y, m.mean.x);
    PerpendicularFrame frame{{-std::sin(theta), std::cos(theta), 0}, {0, 0, 1}};
    return report_in_frame(m, rho.n_qubits, frame);
}

}  // namespace wgs
