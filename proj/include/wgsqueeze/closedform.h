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

// Closed-form xi_2^2 for uniform weighted cluster and fully-connected states.
//
// FormulaSet::Printed evaluates the expressions exactly as stated, with
// these typographic readings:
//   cluster:  "sin^2 alpha/2"  -> (sin^2 alpha) / 2
//             "cos^4 alpha/2"  -> cos^4(alpha / 2)
//             damping denominator -> [1 + e^{-gt}(cos^2(alpha/2) - 1)]^2
// The first two reproduce the noiseless optimum xi_min = 0.7312 at alpha ~ 1.00.
//
// FormulaSet::Corrected returns the values the exact state actually has; see
// docs/ERRATA.md for where and why the two differ.

#ifndef WGSQUEEZE_CLOSEDFORM_H
#define WGSQUEEZE_CLOSEDFORM_H

#include "wgsqueeze/core.h"

namespace wgs {

struct ClusterParams {
    double alpha;
    double phi;  // in [-pi, pi]
};

struct CompleteParams {
    int n_qubits;  // >= 2
    double alpha;
};

struct FormulaOptions {
    FormulaSet formulas = FormulaSet::Printed;
    /// Take the noise terms of the fully-connected formulas to zero at A = B = 0
    /// (matching the noiseless value 1). When false that point throws IndeterminateError.
    bool zero_limit = true;
};

double cluster_xi2_sq(const ClusterParams &p, const ChannelSetting &channel,
                      FormulaSet formulas = FormulaSet::Printed);

/// The phi minimizing cluster_xi2_sq at fixed alpha, in (-pi/2, pi/2].
///
/// For the printed forms the phi-dependence is c cos^2(phi) + s sin(2 phi) with
/// channel-scaled c, s; its minimum is c/2 - sqrt(c^2/4 + s^2). Returns 0 when
/// the dependence is flat.
double cluster_optimal_phi(double alpha, const ChannelSetting &channel,
                           FormulaSet formulas = FormulaSet::Printed);

struct PhiMinimum {
    double phi;
    double xi2_sq;
};
PhiMinimum cluster_min_over_phi(double alpha, const ChannelSetting &channel,
                                FormulaSet formulas = FormulaSet::Printed);

struct CompleteAB {
    double a;
    double b;
};
/// A = 1 - cos^{N-2}(2 alpha), B = 4 sin(alpha) cos^{N-2}(alpha).
CompleteAB complete_AB(int n_qubits, double alpha);

double complete_xi2_sq(const CompleteParams &p, const ChannelSetting &channel,
                       const FormulaOptions &options = {});

}  // namespace wgs

#endif
