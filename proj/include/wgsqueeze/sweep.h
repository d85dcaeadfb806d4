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

#ifndef WGSQUEEZE_SWEEP_H
#define WGSQUEEZE_SWEEP_H

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wgsqueeze/closedform.h"
#include "wgsqueeze/core.h"

namespace wgs {

/// 1-D search: a uniform coarse grid over [lo + margin, hi - margin], then
/// golden-section refinement around the best grid point.
struct SearchConfig {
    int coarse_points = 512;
    double tolerance = 1e-8;
    /// Keeps the search off the open-interval endpoints, where the printed
    /// fully-connected formula at N = 2 degenerates to 0/0.
    double margin = 1e-4;
};

struct ScalarMinimum {
    double x;
    double value;
};

/// Non-finite values and PoleError are treated as +infinity. Throws
/// std::runtime_error if no grid point is finite.
ScalarMinimum minimize_scalar(const std::function<double(double)> &f, double lo, double hi,
                              const SearchConfig &config = {});

struct ClusterOptimum {
    double alpha;
    double phi;
    double xi2_sq;
    double xi_min;  // sqrt(xi2_sq)
};

/// Global minimum of the cluster xi_2^2 over alpha in (0, pi), phi analytic.
ClusterOptimum minimize_cluster(const ChannelSetting &channel, FormulaSet formulas = FormulaSet::Printed,
                                const SearchConfig &config = {});

/// min over alpha in (0, pi) at a fixed phi.
ClusterOptimum minimize_cluster_at_phi(double phi, const ChannelSetting &channel,
                                       FormulaSet formulas = FormulaSet::Printed, const SearchConfig &config = {});

/// The 2*gamma*t in (0, upper] at which the optimized cluster xi_min reaches 1,
/// by bisection to 1e-10. Returns NaN if xi_min stays below 1 up to `upper`.
double cluster_squeezing_threshold(ChannelKind kind, double upper = 4, FormulaSet formulas = FormulaSet::Printed,
                                   const SearchConfig &config = {});

struct CompleteOptimum {
    double alpha;
    double xi2_sq;
    double xi2;  // sqrt(xi2_sq)
};

/// Minimizes complete_xi2_sq over alpha in (0, pi/2).
CompleteOptimum minimize_complete_alpha(int n_qubits, const ChannelSetting &channel,
                                        FormulaSet formulas = FormulaSet::Printed, const SearchConfig &config = {});

struct SweepPoint {
    int n_qubits = 0;
    double xi2 = 0;  // optimized xi_2 (not squared)
    double alpha_opt = 0;
    bool ok = true;
    std::string error;  // set when ok is false
};

/// One optimized point per N. Requires a non-empty ascending grid of N >= 2.
std::vector<SweepPoint> scaling_sweep(std::span<const int> n_grid, const ChannelSetting &channel,
                                      FormulaSet formulas = FormulaSet::Printed, const SearchConfig &config = {});

struct RegressionFit {
    double slope = 0;
    double slope_stderr = 0;
    double intercept = 0;
    double r_squared = 0;
};

/// Ordinary least squares of y on x.
RegressionFit fit_line(std::span<const double> x, std::span<const double> y);

/// ln y = slope ln x + intercept.
RegressionFit fit_log_log(std::span<const double> x, std::span<const double> y);

/// ln xi_2 = zeta ln N + delta. Rejects flagged points, fewer than three
/// points, and grids with a single distinct N.
RegressionFit fit_power_law(std::span<const SweepPoint> points);

/// `count` log-spaced integers in [lo, hi], rounded and deduplicated.
std::vector<int> log_grid(int lo, int hi, int count);
std::vector<int> linear_grid(int lo, int hi, int step = 1);

struct TableRow {
    double two_gamma_t;
    RegressionFit fit;
};

/// Power-law fit of the optimized complete-family sweep at each 2*gamma*t.
std::vector<TableRow> regression_table(ChannelKind kind, std::span<const double> two_gamma_ts,
                                       std::span<const int> n_grid, FormulaSet formulas = FormulaSet::Printed,
                                       const SearchConfig &config = {});

struct ReferenceRow {
    double two_gamma_t;
    double zeta;
    double zeta_stderr;
    double delta;
};

/// Reference regression rows for the dephasing and depolarizing sweeps.
std::span<const ReferenceRow> reference_table(ChannelKind kind);

}  // namespace wgs

#endif
