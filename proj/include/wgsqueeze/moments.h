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

// Analytic one- and two-qubit Pauli moments of weighted graph states.
//
// A weighted graph state has closed-form reduced moments: every single-qubit
// coherence and every pair correlator is a product over the remaining qubits
// of (1 + e^{-i w}) / 2 factors. Local channels act on those moments through
// their Pauli transfer matrix, so the collective spin mean and covariance
// after noise follow without ever forming the 2^N state. This is what backs
// FormulaSet::Corrected, and it scales to N in the thousands for the two
// uniform families.

#ifndef WGSQUEEZE_MOMENTS_H
#define WGSQUEEZE_MOMENTS_H

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "wgsqueeze/core.h"

namespace wgs {

/// Heisenberg-picture Pauli transfer matrix on (I, sx, sy, sz):
/// <tau_a>' = sum_b R(a, b) <tau_b>.
Eigen::Matrix4d pauli_transfer_matrix(const ChannelSetting &channel);

/// (1, <sx>, <sy>, <sz>) of one qubit.
using PauliVector = Eigen::Vector4d;
/// G(a, b) = <tau_a^j tau_b^k> with tau_0 = I; row/column 0 hold the marginals.
using PauliTable = Eigen::Matrix4d;

/// Weights from a third qubit l to the qubits of interest, with multiplicity.
struct RestCoupling {
    double to_j;
    double to_k;
    std::size_t count;
};

/// Noiseless single-qubit moments of qubit j given its couplings to every other qubit.
PauliVector graph_single_moments(std::span<const RestCoupling> rest);

/// Noiseless pair table of (j, k) given w_jk and the couplings of the other qubits.
PauliTable graph_pair_moments(double w_jk, std::span<const RestCoupling> rest);

/// Per-qubit collective moments: <J>/N and the symmetrized Cov(J_a, J_b)/N.
struct SpinMoments {
    Eigen::Vector3d mean;
    Eigen::Matrix3d covariance;
};

/// Exact per-qubit moments of an arbitrary weighted graph state after a local channel. O(N^3).
SpinMoments graph_spin_moments(const GraphSpec &graph, const ChannelSetting &channel);

/// Per-qubit moments (<J>/N and Cov(J)/N) of the uniform complete family
/// at closed-form parameter alpha (pair phase 2*alpha). O(1) in N.
SpinMoments complete_family_moments(int n_qubits, double alpha, const ChannelSetting &channel);

/// Per-qubit moments of a uniform ring; exact for any ring with N >= 5 and
/// independent of N there.
SpinMoments ring_bulk_moments(double alpha, const ChannelSetting &channel);

/// xi_2^2 = Var(J_d) N / |<J>|^2 along a unit direction d.
double xi2_sq_along(const SpinMoments &m, const BlochVector &direction);

/// Minimal xi_2^2 over the plane perpendicular to the mean spin, and the
/// minimizing angle in perpendicular_frame(mean).
struct PlaneMinimum {
    double xi2_sq;
    double phi;
};
PlaneMinimum xi2_sq_plane_minimum(const SpinMoments &m);

}  // namespace wgs

#endif
