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

// Acceptance report. Prints one [PASS] / [FAIL] line per criterion with the
// measured value, the target and the tolerance. Every tolerance is pinned
// here. A FAIL line is a reproduction result, not a crash, so the process
// exits 0 whenever all criteria could be evaluated; it exits 1 only when a
// criterion threw.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wgsqueeze/cli/commands.h"
#include "wgsqueeze/metrology.h"
#include "wgsqueeze/oracle.h"
#include "wgsqueeze/sweep.h"

using namespace wgs;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *format, ...) {
    char buf[1024];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<double> kNoisyTwoGammaTs = {0.25, 0.5, 0.75, 1.0};

// ---------------------------------------------------------------------------

Outcome criterion1() {
    constexpr double kTarget = 0.7312, kTol = 0.0005, kMaxSeconds = 1;
    auto t0 = std::chrono::steady_clock::now();
    ClusterOptimum o = minimize_cluster(ChannelSetting::none());
    double dt = seconds_since(t0);
    bool pass = std::abs(o.xi_min - kTarget) <= kTol && dt < kMaxSeconds;
    return {pass, fmt("cluster optimum xi_min = %.6f at alpha = %.4f (target %.4f +/- %.4f); %.3f s (limit %.0f s)",
                      o.xi_min, o.alpha, kTarget, kTol, dt, kMaxSeconds)};
}

Outcome criterion2() {
    constexpr double kTarget = 0.398, kTol = 0.005, kMaxSeconds = 5;
    auto t0 = std::chrono::steady_clock::now();
    double t = cluster_squeezing_threshold(ChannelKind::Depolarizing);
    double dt = seconds_since(t0);
    bool pass = std::abs(t - kTarget) <= kTol && dt < kMaxSeconds;
    return {pass, fmt("depolarizing threshold 2gt = %.6f (target %.3f +/- %.3f); %.3f s (limit %.0f s)", t, kTarget,
                      kTol, dt, kMaxSeconds)};
}

Outcome criterion3() {
    constexpr double kZetaTol = 0.015, kDeltaTol = 0.03, kDelta0 = 0.2730, kMaxSeconds = 30;
    const double zeta_ref[] = {-0.3372, -0.2643, -0.1813, -0.1348, -0.1064};
    auto t0 = std::chrono::steady_clock::now();
    auto grid = log_grid(10, 1000, 30);
    std::vector<double> tgs = {0, 0.25, 0.5, 0.75, 1.0};
    auto rows = regression_table(ChannelKind::Dephasing, tgs, grid);
    double dt = seconds_since(t0);
    bool pass = dt < kMaxSeconds;
    std::string zetas;
    for (std::size_t i = 0; i < rows.size(); i++) {
        bool ok = std::abs(rows[i].fit.slope - zeta_ref[i]) <= kZetaTol;
        pass &= ok;
        zetas += fmt("%s%.4f(ref %.4f%s)", i ? ", " : "", rows[i].fit.slope, zeta_ref[i], ok ? "" : " x");
    }
    bool delta_ok = std::abs(rows[0].fit.intercept - kDelta0) <= kDeltaTol;
    pass &= delta_ok;
    return {pass, fmt("log grid 10..1000 x30: zeta = [%s] (tol %.3f); delta(0) = %.4f (ref %.4f +/- %.2f); %.2f s "
                      "(limit %.0f s)",
                      zetas.c_str(), kZetaTol, rows[0].fit.intercept, kDelta0, kDeltaTol, dt, kMaxSeconds)};
}

Outcome criterion4() {
    constexpr double kTol = 1e-6;
    auto grid = log_grid(10, 1000, 30);
    auto deph = regression_table(ChannelKind::Dephasing, kNoisyTwoGammaTs, grid);
    auto depo = regression_table(ChannelKind::Depolarizing, kNoisyTwoGammaTs, grid);
    auto ref_deph = reference_table(ChannelKind::Dephasing);
    auto ref_depo = reference_table(ChannelKind::Depolarizing);
    bool pass = true;
    double max_dzeta = 0, max_ddelta = 0;
    std::string printed;
    for (std::size_t i = 0; i < kNoisyTwoGammaTs.size(); i++) {
        const double gamma_t = kNoisyTwoGammaTs[i] / 2;
        max_dzeta = std::max(max_dzeta, std::abs(depo[i].fit.slope - deph[i].fit.slope));
        double ddelta = depo[i].fit.intercept - deph[i].fit.intercept;
        max_ddelta = std::max(max_ddelta, std::abs(ddelta - gamma_t));
        // Table precision is four decimals.
        double ref_diff = std::round((ref_depo[i + 1].delta - ref_deph[i + 1].delta) * 1e4) / 1e4;
        bool table_ok = std::round(ddelta * 1e4) / 1e4 == ref_diff && std::round(gamma_t * 1e4) / 1e4 == ref_diff &&
                        ref_depo[i + 1].zeta == ref_deph[i + 1].zeta;
        pass &= table_ok;
        printed += fmt("%s%.4f", i ? ", " : "", ref_diff);
    }
    pass &= max_dzeta <= kTol && max_ddelta <= kTol;
    return {pass, fmt("max |dzeta| = %.2e, max |ddelta - gt| = %.2e (tol %.0e); printed ddelta = [%s] vs gt = "
                      "[0.125, 0.25, 0.375, 0.5]",
                      max_dzeta, max_ddelta, kTol, printed.c_str())};
}

Outcome criterion5() {
    constexpr double kNoiselessTol = 1e-9, kNoisyTol = 1e-8, kMaxSeconds = 120;
    auto t0 = std::chrono::steady_clock::now();
    cli::RunConfig cfg;
    cfg.command = cli::Command::OracleCheck;
    cfg.family = Family::Complete;
    cfg.channels = {ChannelKind::None, ChannelKind::Dephasing};
    cfg.two_gamma_ts = {0.25, 1};
    cfg.n_grid_spec = "lin:2:6";
    cli::CommandOutput out = cli::cmd_oracle_check(cli::with_defaults(cfg));
    double dt = seconds_since(t0);

    const cli::Table &t = out.tables.at(0);
    auto col = [&](const char *c) { return t.column_index(c); };
    const std::size_t c_channel = col("channel"), c_n = col("n"), c_formulas = col("formulas"),
                      c_abs = col("abs_diff"), c_scaled = col("scaled_diff"), c_oracle = col("oracle");
    double none_abs = 0, none_scaled = 0, none_at = 0;
    int none_cases = 0;
    std::map<std::string, double> deph_abs, deph_scaled;
    for (const auto &row : t.rows) {
        const auto &channel = std::get<std::string>(row[c_channel]);
        const long long n = std::get<long long>(row[c_n]);
        const auto &formulas = std::get<std::string>(row[c_formulas]);
        const double abs_diff = std::get<double>(row[c_abs]), scaled = std::get<double>(row[c_scaled]);
        if (channel == "none" && formulas == "printed") {
            none_cases++;
            if (abs_diff > none_abs) {
                none_abs = abs_diff;
                none_at = std::get<double>(row[c_oracle]);
            }
            none_scaled = std::max(none_scaled, scaled);
        } else if (channel == "dephasing" && n <= 5) {
            deph_abs[formulas] = std::max(deph_abs[formulas], abs_diff);
            deph_scaled[formulas] = std::max(deph_scaled[formulas], scaled);
        }
    }
    const bool none_ok = none_cases == 5 * 20 && none_abs <= kNoiselessTol;
    const bool printed_ok = deph_abs["printed"] <= kNoisyTol;
    const bool corrected_ok = deph_abs["corrected"] <= kNoisyTol;
    // The corrected formula is documented in docs/ERRATA.md.
    const bool deph_ok = printed_ok || corrected_ok;
    bool pass = none_ok && deph_ok && dt < kMaxSeconds;
    return {pass,
            fmt("noiseless N=2..6, %d alphas: max |dxi2^2| = %.3g at xi2^2 = %.3g (tol %.0e; relative %.2e); "
                "dephasing N=2..5: printed max %.3g (%s), corrected max %.3g, relative %.2e (tol %.0e); %.2f s "
                "(limit %.0f s)",
                none_cases, none_abs, none_at, kNoiselessTol, none_scaled, deph_abs["printed"],
                printed_ok ? "matches" : "erratum", deph_abs["corrected"], deph_scaled["corrected"], kNoisyTol, dt,
                kMaxSeconds)};
}

DensityMatrix random_density(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    const int dim = 1 << n;
    Eigen::MatrixXcd a(dim, dim);
    for (int r = 0; r < dim; r++) {
        for (int c = 0; c < dim; c++) {
            a(r, c) = {g(rng), g(rng)};
        }
    }
    Eigen::MatrixXcd rho = a * a.adjoint();
    return {n, rho / rho.trace().real()};
}

Outcome criterion6() {
    constexpr double kTol = 1e-12, kPsdTol = 1e-13;
    const ChannelKind noisy[] = {ChannelKind::Dephasing, ChannelKind::Depolarizing, ChannelKind::Damping};
    double completeness = kraus_for(ChannelSetting::none()).completeness_error();
    for (ChannelKind kind : noisy) {
        for (int i = 0; i <= 24; i++) {
            double gt = std::pow(10.0, -4 + 6.0 * i / 24);
            completeness = std::max(completeness, kraus_for(ChannelSetting(kind, gt)).completeness_error());
        }
    }
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> strength(0, 3);
    double trace_err = 0, herm_err = 0, min_eig = 1;
    for (int trial = 0; trial < 200; trial++) {
        DensityMatrix rho = random_density(1 + trial % 3, rng);
        DensityMatrix out = apply_local_channel(rho, ChannelSetting(noisy[trial % 3], strength(rng)));
        trace_err = std::max(trace_err, std::abs(out.matrix.trace() - 1.0));
        herm_err = std::max(herm_err, (out.matrix - out.matrix.adjoint()).cwiseAbs().maxCoeff());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(out.matrix);
        min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
    }
    double semigroup = 0;
    for (ChannelKind kind : noisy) {
        for (auto [t1, t2] : {std::pair{0.1, 0.2}, std::pair{0.5, 1.3}, std::pair{2.0, 0.05}}) {
            DensityMatrix rho = random_density(2, rng);
            auto twice =
                apply_local_channel(apply_local_channel(rho, ChannelSetting(kind, t1)), ChannelSetting(kind, t2));
            auto once = apply_local_channel(rho, ChannelSetting(kind, t1 + t2));
            semigroup = std::max(semigroup, (twice.matrix - once.matrix).cwiseAbs().maxCoeff());
        }
    }
    double fixed = 0;
    for (int n = 1; n <= 3; n++) {
        auto mixed = DensityMatrix::maximally_mixed(n);
        for (double gt : {0.01, 0.5, 4.0}) {
            auto out = apply_local_channel(mixed, ChannelSetting(ChannelKind::Depolarizing, gt));
            fixed = std::max(fixed, (out.matrix - mixed.matrix).cwiseAbs().maxCoeff());
        }
    }
    bool pass = completeness <= kTol && trace_err <= kPsdTol && herm_err <= kPsdTol && min_eig >= -kPsdTol &&
                semigroup <= kTol && fixed == 0;
    return {pass, fmt("completeness %.1e (tol %.0e); 200 random rho: trace %.1e, hermiticity %.1e, min eigenvalue "
                      "%.1e (tol %.0e); semigroup %.1e (tol %.0e); depolarizing fixed point %.1e (exact)",
                      completeness, kTol, trace_err, herm_err, min_eig, kPsdTol, semigroup, kTol, fixed)};
}

Outcome criterion7() {
    constexpr double kTol = 1e-10;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> dt(-10, 10);
    double worst = 0;
    for (const auto &[family, n, alpha, kind] :
         {std::tuple{Family::Complete, 5, 0.3, ChannelKind::Dephasing},
          std::tuple{Family::Cluster, 6, 1.0, ChannelKind::Depolarizing},
          std::tuple{Family::Complete, 4, 0.7, ChannelKind::Damping}}) {
        auto base = apply_local_channel(DensityMatrix::from_pure(build_state(family_graph(family, n, alpha))),
                                        ChannelSetting(kind, 0.2));
        double ref = std::sqrt(squeezing_report(base).xi2_sq);
        for (int i = 0; i < 50; i++) {
            double v = std::sqrt(squeezing_report(global_z_rotation(base, dt(rng))).xi2_sq);
            worst = std::max(worst, std::abs(v - ref));
        }
    }
    return {worst <= kTol, fmt("max |dxi2| over 3 states x 50 random rotations = %.2e (tol %.0e)", worst, kTol)};
}

Outcome criterion8() {
    constexpr double kIdentityTol = 1e-9, kTarget = 0.6064, kTol = 0.015;
    const auto grid = linear_grid(2, 1000);
    auto ch = ChannelSetting::from_two_gamma_t(ChannelKind::Dephasing, 1);
    auto sweep = scaling_sweep(grid, ch);
    auto series = metrology_series(sweep, ch);
    std::vector<PhasePoint> pts;
    for (const auto &r : series) {
        pts.push_back({r.n_qubits, r.delta_phi});
    }
    const double varsigma = sensitivity_exponent(pts).varsigma;
    const double zeta = fit_power_law(sweep).slope;
    bool pass = std::abs(varsigma - (0.5 - zeta)) <= kIdentityTol && std::abs(varsigma - kTarget) <= kTol;
    std::string rows;
    for (ChannelKind kind : {ChannelKind::Dephasing, ChannelKind::Depolarizing}) {
        for (double tg : kNoisyTwoGammaTs) {
            auto c = ChannelSetting::from_two_gamma_t(kind, tg);
            auto s = metrology_series(scaling_sweep(grid, c), c);
            auto cross = improvement_crossover(s);
            const double p_end = *s.back().improvement_p;
            bool ok = cross.has_value() && p_end > 1;
            pass &= ok;
            rows += fmt("; %s %.2f: P(2)=%.3f crossover %s P(1000)=%.3f%s", std::string(to_string(kind)).c_str(), tg,
                        *s.front().improvement_p, cross ? std::to_string(*cross).c_str() : "none", p_end,
                        ok ? "" : " x");
        }
    }
    return {pass, fmt("N=2..1000: varsigma = %.7f, 0.5 - zeta = %.7f (tol %.0e), target %.4f +/- %.3f%s", varsigma,
                      0.5 - zeta, kIdentityTol, kTarget, kTol, rows.c_str())};
}

Outcome criterion9() {
    constexpr double kBand = 0.5;
    const auto grid = linear_grid(2, 1000);
    bool pass = true;
    std::string rows;
    for (auto [kind, target] : {std::pair{ChannelKind::Dephasing, 4.5}, std::pair{ChannelKind::Depolarizing, 3.5}}) {
        bool any = false;
        rows += fmt("%s%s (ref %.1f):", rows.empty() ? "" : "; ", std::string(to_string(kind)).c_str(), target);
        for (double tg : kNoisyTwoGammaTs) {
            auto c = ChannelSetting::from_two_gamma_t(kind, tg);
            auto s = metrology_series(scaling_sweep(grid, c), c);
            double p = *s.back().improvement_p;
            any |= std::abs(p / target - 1) <= kBand;
            rows += fmt(" %.2f->%.3f", tg, p);
        }
        pass &= any;
    }
    return {pass, fmt("P at N=1000 per 2gt, some within +/-%.0f%%: %s", kBand * 100, rows.c_str())};
}

std::map<std::string, std::string> run_into(const fs::path &dir, const char *command) {
    fs::remove_all(dir);
    std::string out_dir = dir.string();
    const char *argv[] = {"wgsqueeze", command, "--out", out_dir.c_str()};
    std::ostringstream out, err;
    int code = cli::run_cli(4, argv, out, err);
    if (code != cli::kExitOk) {
        throw std::runtime_error(std::string(command) + " exited with " + std::to_string(code) + ": " + err.str());
    }
    std::map<std::string, std::string> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        files[entry.path().filename().string()] = s.str();
    }
    return files;
}

Outcome criterion10() {
    const fs::path root = fs::temp_directory_path() / "wgsqueeze_acceptance";
    std::size_t files = 0, bytes = 0;
    bool pass = true;
    for (const char *command : {"tables", "metrology"}) {
        auto a = run_into(root / (std::string(command) + "_1"), command);
        auto b = run_into(root / (std::string(command) + "_2"), command);
        pass &= !a.empty() && a == b;
        files += a.size();
        for (const auto &[name, content] : a) {
            bytes += content.size();
        }
    }
    fs::remove_all(root);
    return {pass, fmt("two default runs of tables + metrology: %zu files, %zu bytes, %s", files, bytes,
                      pass ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8,
                                                            criterion9, criterion10};
    int passed = 0, errors = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception &e) {
            o = {false, std::string("ERROR: ") + e.what()};
            errors++;
        }
        passed += o.pass;
        std::printf("[%s] criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%zu criteria pass\n", passed, criteria.size());
    return errors == 0 ? 0 : 1;
}
