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

#include "wgsqueeze/sweep.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wgs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double guarded(const std::function<double(double)> &f, double x) {
    try {
        double v = f(x);
        return std::isfinite(v) ? v : kInf;
    } catch (const PoleError &) {
        return kInf;
    }
}

constexpr std::array<ReferenceRow, 5> kDephasingReference{{
    {0.00, -0.3372, 0.009, 0.2730},
    {0.25, -0.2643, 0.013, 0.0298},
    {0.50, -0.1813, 0.014, -0.1173},
    {0.75, -0.1348, 0.022, -0.1455},
    {1.00, -0.1064, 0.030, -0.1338},
}};

constexpr std::array<ReferenceRow, 5> kDepolarizingReference{{
    {0.00, -0.3372, 0.006, 0.2730},
    {0.25, -0.2643, 0.009, 0.1548},
    {0.50, -0.1813, 0.013, 0.1327},
    {0.75, -0.1348, 0.030, 0.2295},
    {1.00, -0.1064, 0.034, 0.3662},
}};

}  // namespace

ScalarMinimum minimize_scalar(const std::function<double(double)> &f, double lo, double hi,
                              const SearchConfig &config) {
    const double a0 = lo + config.margin;
    const double b0 = hi - config.margin;
    if (!(b0 > a0) || config.coarse_points < 3) {
        throw std::invalid_argument("empty search interval or too few grid points");
    }
    const int n = config.coarse_points;
    const double step = (b0 - a0) / (n - 1);

    int best = -1;
    double best_value = kInf;
    for (int i = 0; i < n; i++) {
        double v = guarded(f, a0 + step * i);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    if (best < 0) {
        throw std::runtime_error("objective has no finite value on the search grid");
    }

    double a = a0 + step * std::max(best - 1, 0);
    double b = a0 + step * std::min(best + 1, n - 1);
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = guarded(f, c);
    double fd = guarded(f, d);
    while (b - a > config.tolerance) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = guarded(f, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = guarded(f, d);
        }
    }
    ScalarMinimum result{a0 + step * best, best_value};
    const double mid = (a + b) / 2;
    const double f_mid = guarded(f, mid);
    for (auto [x, v] : {std::pair{c, fc}, std::pair{d, fd}, std::pair{mid, f_mid}}) {
        if (v < result.value) {
            result = {x, v};
        }
    }
    return result;
}

ClusterOptimum minimize_cluster(const ChannelSetting &channel, FormulaSet formulas, const SearchConfig &config) {
    auto objective = [&](double alpha) { return cluster_min_over_phi(alpha, channel, formulas).xi2_sq; };
    ScalarMinimum m = minimize_scalar(objective, 0, kPi, config);
    double phi = cluster_optimal_phi(m.x, channel, formulas);
    return {m.x, phi, m.value, std::sqrt(m.value)};
}

ClusterOptimum minimize_cluster_at_phi(double phi, const ChannelSetting &channel, FormulaSet formulas,
                                       const SearchConfig &config) {
    auto objective = [&](double alpha) { return cluster_xi2_sq({alpha, phi}, channel, formulas); };
    ScalarMinimum m = minimize_scalar(objective, 0, kPi, config);
    return {m.x, phi, m.value, std::sqrt(m.value)};
}

double cluster_squeezing_threshold(ChannelKind kind, double upper, FormulaSet formulas,
                                   const SearchConfig &config) {
    auto excess = [&](double two_gamma_t) {
        return minimize_cluster(ChannelSetting::from_two_gamma_t(kind, two_gamma_t), formulas, config).xi_min - 1;
    };
    double lo = 0;
    double hi = upper;
    if (excess(lo) >= 0 || excess(hi) < 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    while (hi - lo > 1e-10) {
        double mid = (lo + hi) / 2;
        (excess(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

CompleteOptimum minimize_complete_alpha(int n_qubits, const ChannelSetting &channel, FormulaSet formulas,
                                        const SearchConfig &config) {
    if (n_qubits < 2) {
        throw std::invalid_argument("complete family needs n_qubits >= 2");
    }
    FormulaOptions options{formulas};
    auto objective = [&](double alpha) { return complete_xi2_sq({n_qubits, alpha}, channel, options); };
    ScalarMinimum m = minimize_scalar(objective, 0, kPi / 2, config);
    return {m.x, m.value, std::sqrt(m.value)};
}

std::vector<SweepPoint> scaling_sweep(std::span<const int> n_grid, const ChannelSetting &channel,
                                      FormulaSet formulas, const SearchConfig &config) {
    if (n_grid.empty()) {
        throw std::invalid_argument("N grid is empty");
    }
    for (std::size_t i = 0; i < n_grid.size(); i++) {
        if (n_grid[i] < 2) {
            throw std::invalid_argument("N grid entries must be >= 2");
        }
        if (i > 0 && n_grid[i] < n_grid[i - 1]) {
            throw std::invalid_argument("N grid must be sorted ascending");
        }
    }
    std::vector<SweepPoint> points;
    points.reserve(n_grid.size());
    for (int n : n_grid) {
        SweepPoint p;
        p.n_qubits = n;
        try {
            CompleteOptimum opt = minimize_complete_alpha(n, channel, formulas, config);
            p.xi2 = opt.xi2;
            p.alpha_opt = opt.alpha;
            if (!(opt.xi2 > 0)) {
                p.ok = false;
                p.error = "optimized xi2 is not positive";
            }
        } catch (const std::exception &e) {
            p.ok = false;
            p.error = e.what();
        }
        points.push_back(std::move(p));
    }
    return points;
}

RegressionFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size()) {
        throw std::invalid_argument("x and y differ in length");
    }
    if (n < 3) {
        throw DegenerateFitError("regression needs at least 3 points, got " + std::to_string(n));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; i++) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (!(sxx > 0)) {
        throw DegenerateFitError("all abscissae are equal");
    }
    RegressionFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0;
    for (std::size_t i = 0; i < n; i++) {
        double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ssr += r * r;
    }
    fit.slope_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
    fit.r_squared = syy > 0 ? std::clamp(1 - ssr / syy, 0.0, 1.0) : 1.0;
    return fit;
}

RegressionFit fit_log_log(std::span<const double> x, std::span<const double> y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        if (!(x[i] > 0)) {
            throw std::invalid_argument("log-log fit needs positive abscissae");
        }
        lx[i] = std::log(x[i]);
    }
    for (std::size_t i = 0; i < y.size(); i++) {
        if (!(y[i] > 0)) {
            throw std::invalid_argument("log-log fit needs positive ordinates");
        }
        ly[i] = std::log(y[i]);
    }
    return fit_line(lx, ly);
}

RegressionFit fit_power_law(std::span<const SweepPoint> points) {
    std::vector<double> n, xi;
    for (const auto &p : points) {
        if (!p.ok) {
            throw std::invalid_argument("sweep point N=" + std::to_string(p.n_qubits) + " failed: " + p.error);
        }
        n.push_back(p.n_qubits);
        xi.push_back(p.xi2);
    }
    return fit_log_log(n, xi);
}

std::vector<int> log_grid(int lo, int hi, int count) {
    if (lo < 1 || hi < lo || count < 1) {
        throw std::invalid_argument("log grid needs 1 <= lo <= hi and count >= 1");
    }
    std::vector<int> grid;
    const double l0 = std::log(static_cast<double>(lo));
    const double l1 = std::log(static_cast<double>(hi));
    for (int i = 0; i < count; i++) {
        double t = count == 1 ? 0 : static_cast<double>(i) / (count - 1);
        grid.push_back(static_cast<int>(std::lround(std::exp(l0 + t * (l1 - l0)))));
    }
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::vector<int> linear_grid(int lo, int hi, int step) {
    if (hi < lo || step < 1) {
        throw std::invalid_argument("linear grid needs lo <= hi and step >= 1");
    }
    std::vector<int> grid;
    for (int n = lo; n <= hi; n += step) {
        grid.push_back(n);
    }
    return grid;
}

std::vector<TableRow> regression_table(ChannelKind kind, std::span<const double> two_gamma_ts,
                                       std::span<const int> n_grid, FormulaSet formulas,
                                       const SearchConfig &config) {
    std::vector<TableRow> rows;
    for (double tg : two_gamma_ts) {
        auto points = scaling_sweep(n_grid, ChannelSetting::from_two_gamma_t(kind, tg), formulas, config);
        rows.push_back({tg, fit_power_law(points)});
    }
    return rows;
}

std::span<const ReferenceRow> reference_table(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::Dephasing:
            return kDephasingReference;
        case ChannelKind::Depolarizing:
            return kDepolarizingReference;
        default:
            return {};
    }
}

}  // namespace wgs
