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

// Dense brute-force reference: weighted graph states, local Kraus channels,
// and squeezing parameters straight from the collective-spin definition.
//
// Basis convention: each qubit is ordered (|down>, |up>) with sz|up> = +|up>,
// so sz = diag(-1, +1). Qubit q is bit (N-1-q) of a basis index, so for two
// qubits the index order is (dd, du, ud, uu).

#ifndef WGSQUEEZE_ORACLE_H
#define WGSQUEEZE_ORACLE_H

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wgsqueeze/core.h"

namespace wgs {

inline constexpr int kMaxPureQubits = 14;
inline constexpr int kMaxDensityQubits = 7;

struct PureState {
    int n_qubits;
    Eigen::VectorXcd amplitudes;
};

struct DensityMatrix {
    int n_qubits;
    Eigen::MatrixXcd matrix;

    static DensityMatrix from_pure(const PureState &state);
    static DensityMatrix maximally_mixed(int n_qubits);
};

/// Kraus operators E_k = sqrt(weights[k]) * ops[k]. Pauli mixtures keep the
/// probabilities as weights so that sum_k weights[k] is exactly 1 and the
/// maximally mixed state is a bitwise fixed point. Empty weights mean all 1.
struct KrausSet {
    std::vector<Eigen::Matrix2cd> ops;
    std::vector<double> weights;

    double weight(std::size_t k) const { return weights.empty() ? 1.0 : weights[k]; }

    /// || sum_k E_k^dag E_k - I || (Frobenius).
    double completeness_error() const;
};

/// Pauli matrices in the (|down>, |up>) basis.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();

/// |+>^N followed by a phase e^{-i w_jk} on every basis state with both j and k down.
PureState build_state(const GraphSpec &graph);

/// Dephasing {sqrt(p0) I, sqrt(p3) sz}, depolarizing {sqrt(p0) I, sqrt(p) sx, sqrt(p) sy, sqrt(p) sz},
/// damping {diag(1, e^{-gt/2}), sqrt(1 - e^{-gt}) |down><up|}, none {I}.
KrausSet kraus_for(const ChannelSetting &channel);

DensityMatrix apply_single_qubit_kraus(const DensityMatrix &rho, const KrausSet &kraus, int qubit);

/// The same single-qubit map on every qubit, in order 0..N-1.
DensityMatrix apply_local_channel(const DensityMatrix &rho, const ChannelSetting &channel);
DensityMatrix apply_local_channel(const DensityMatrix &rho, const ChannelSetting &channel,
                                  std::span<const int> qubit_order);

/// exp(-i phase J_z) rho exp(+i phase J_z); rotates <J> by +phase about z.
DensityMatrix global_z_rotation(const DensityMatrix &rho, double phase);

struct CollectiveMoments {
    BlochVector mean;        // <J>
    Eigen::Matrix3d second;  // (1/2)<J_a J_b + J_b J_a>
};
CollectiveMoments collective_moments(const DensityMatrix &rho);

/// Minimization over the full plane perpendicular to <J>.
SqueezingReport squeezing_report(const DensityMatrix &rho);

/// Minimization restricted to directions (-cos phi sin t, cos phi cos t, sin phi)
/// with t the azimuth of <J>. Equal to squeezing_report when <J> is equatorial.
SqueezingReport equatorial_squeezing_report(const DensityMatrix &rho);

}  // namespace wgs

#endif
