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

#ifndef WGSQUEEZE_CORE_H
#define WGSQUEEZE_CORE_H

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "wgsqueeze/errors.h"

namespace wgs {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2 * kPi;

/// Reduces an angle into [0, 2*pi).
double reduce_angle(double radians);

enum class Topology { Chain, Ring, Complete, Custom };

/// The two uniform-weight graph families with closed-form squeezing formulas.
enum class Family { Cluster, Complete };

/// Selects between the closed forms as stated in the literature and the
/// versions reconciled with the exact density-matrix oracle (see docs/ERRATA.md).
enum class FormulaSet { Printed, Corrected };

struct Edge {
    std::size_t a;
    std::size_t b;
    double weight;  // controlled-phase angle in radians, reduced to [0, 2*pi)
};

/// A weighted graph: qubit count plus controlled-phase angles on unordered pairs.
///
/// Edges are stored with a < b, sorted lexicographically. Construction rejects
/// out-of-range qubits, self loops and duplicate pairs.
class GraphSpec {
   public:
    static GraphSpec chain(std::size_t n_qubits, double alpha);
    /// Requires n_qubits >= 3 so that the closing edge (N-1, 0) is distinct.
    static GraphSpec ring(std::size_t n_qubits, double alpha);
    static GraphSpec complete(std::size_t n_qubits, double alpha);
    static GraphSpec custom(std::size_t n_qubits, std::vector<Edge> edges);

    std::size_t n_qubits() const { return n_qubits_; }
    Topology topology() const { return topology_; }
    const std::vector<Edge> &edges() const { return edges_; }

    /// Weight of the pair, or 0 when the pair is not an edge.
    double weight(std::size_t j, std::size_t k) const;

   private:
    GraphSpec(std::size_t n_qubits, Topology topology, std::vector<Edge> edges);

    std::size_t n_qubits_;
    Topology topology_;
    std::vector<Edge> edges_;
};

/// The graph whose state the closed forms of `family` describe at parameter alpha.
///
/// Cluster maps to a ring with weight alpha; the N-independent cluster formula
/// is the periodic-boundary result. Complete maps to the complete graph with
/// weight 2*alpha on every unordered pair, because the generating product runs
/// over ordered pairs j != k and so applies each pair's phase twice.
GraphSpec family_graph(Family family, std::size_t n_qubits, double alpha);

enum class ChannelKind { None, Dephasing, Depolarizing, Damping };

/// Local noise channel and its dimensionless strength gamma*t.
class ChannelSetting {
   public:
    ChannelSetting() = default;
    ChannelSetting(ChannelKind kind, double gamma_t);

    static ChannelSetting none() { return {}; }
    /// Every figure axis is labelled in 2*gamma*t; this halves it.
    static ChannelSetting from_two_gamma_t(ChannelKind kind, double two_gamma_t);

    ChannelKind kind() const { return kind_; }
    /// Zero for ChannelKind::None regardless of what was passed in.
    double gamma_t() const { return gamma_t_; }
    double two_gamma_t() const { return 2 * gamma_t_; }
    bool is_identity() const { return kind_ == ChannelKind::None || gamma_t_ == 0; }

    bool operator==(const ChannelSetting &) const = default;

   private:
    ChannelKind kind_ = ChannelKind::None;
    double gamma_t_ = 0;
};

std::string_view to_string(ChannelKind kind);
std::string_view to_string(Family family);
std::string_view to_string(Topology topology);
std::string_view to_string(FormulaSet formulas);
std::optional<ChannelKind> parse_channel_kind(std::string_view text);
std::optional<Family> parse_family(std::string_view text);

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double dot(const BlochVector &o) const { return x * o.x + y * o.y + z * o.z; }
    BlochVector cross(const BlochVector &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
    BlochVector operator+(const BlochVector &o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector &o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector normalized() const;

    bool operator==(const BlochVector &) const = default;
};

struct SqueezingReport {
    double xi1_sq = 0;
    double xi2_sq = 0;
    BlochVector mean_spin;  // <J>, not normalized
    BlochVector optimal_perp;
    double optimal_phi = 0;  // in [-pi, pi], measured in perpendicular_frame(mean_spin)
};

/// Mean spin direction of a uniform family state, optionally rotated by a
/// global detuning phase Delta*t about z.
///
/// Printed: Cluster -> azimuth (Delta t - alpha), Complete -> (Delta t - N alpha).
/// Corrected: Complete uses (Delta t - (N-1) alpha), which is what the state has.
BlochVector mean_spin_direction(Family family, int n_qubits, double alpha,
                                double detuning_phase = 0,
                                FormulaSet formulas = FormulaSet::Printed);

/// Orthonormal basis (e1, e2) of the plane perpendicular to a mean spin n,
/// with e1 x e2 = n / |n|.
///
/// For equatorial n (|z| < 1e-9) at azimuth theta: e1 = (-sin theta, cos theta, 0),
/// e2 = z. Otherwise e2 is Gram-Schmidt of the coordinate axis least aligned
/// with n (ties go to z), and e1 = e2 x n.
struct PerpendicularFrame {
    BlochVector e1;
    BlochVector e2;

    BlochVector at(double phi) const;
};
PerpendicularFrame perpendicular_frame(const BlochVector &n);

/// cos(phi) e1 + sin(phi) e2 of perpendicular_frame(n).
BlochVector perpendicular_direction(const BlochVector &n, double phi);

/// xi_2^2 = N^2 / (4 |<J>|^2) * xi_1^2.
double xi2_from_xi1(double xi1_sq, double mean_spin_norm, int n_qubits);

}  // namespace wgs

#endif
