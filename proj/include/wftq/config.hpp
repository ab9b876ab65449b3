#pragma once

#include <array>

#include "wftq/kplane.hpp"

namespace wftq {

enum class VertexId { A = 0, B = 1, C = 2, D = 3 };

constexpr std::array<VertexId, 4> kVertices{VertexId::A, VertexId::B,
                                            VertexId::C, VertexId::D};

constexpr const char* vertex_name(VertexId v) {
    constexpr const char* names[4] = {"A", "B", "C", "D"};
    return names[static_cast<int>(v)];
}

/// The quadrilateral as seen from the weighted Fermat-Torricelli point:
/// four direction angles (canonical frame at the basepoint), four geodesic
/// arc lengths, four weights. Directions are normalized so theta[A] = 0 and
/// the sequence is non-decreasing in [0, 2*pi); frame_offset records the
/// rotation removed by normalization so realize_vertices can reproduce
/// absolute positions.
struct AngularConfig {
    Curvature k;
    std::array<double, 4> theta{};   // radians, theta[0] == 0
    std::array<double, 4> length{};  // geodesic arc lengths, > 0
    std::array<double, 4> weight{};  // dimensionless, > 0
    SurfacePoint basepoint;
    double frame_offset = 0.0;

    /// Normalizes raw directions and validates counterclockwise labeling,
    /// positive lengths and weights. Throws InvalidScene otherwise.
    static AngularConfig make(Curvature k, std::array<double, 4> directions,
                              std::array<double, 4> lengths,
                              std::array<double, 4> weights,
                              const SurfacePoint& basepoint);

    /// Same, with the basepoint at the model origin.
    static AngularConfig make(Curvature k, std::array<double, 4> directions,
                              std::array<double, 4> lengths,
                              std::array<double, 4> weights);

    double theta_of(VertexId v) const { return theta[static_cast<int>(v)]; }
    double length_of(VertexId v) const { return length[static_cast<int>(v)]; }
    double weight_of(VertexId v) const { return weight[static_cast<int>(v)]; }

    /// Consecutive gaps (AB, BC, CD, DA); they sum to 2*pi by construction.
    std::array<double, 4> gaps() const;
};

/// The quadrilateral by its vertices, counterclockwise A, B, C, D.
struct VertexConfig {
    Curvature k;
    std::array<SurfacePoint, 4> vertex;
    std::array<double, 4> weight{};

    static VertexConfig make(Curvature k, std::array<SurfacePoint, 4> vertices,
                             std::array<double, 4> weights);
};

enum class Position { Interior, OnDiagonalBD, OnBothDiagonals, NotInterior };

constexpr const char* position_name(Position p) {
    constexpr const char* names[4] = {"Interior", "OnDiagonalBD",
                                      "OnBothDiagonals", "NotInterior"};
    return names[static_cast<int>(p)];
}

/// Signed angle from the arc P_F->from to the arc P_F->to, wrapped into
/// (-pi, pi]. Its sine carries the orientation the plasticity equations use.
double signed_angle(const AngularConfig& cfg, VertexId from, VertexId to);

/// Places vertex R at exp(basepoint, length_R * direction_R). Propagates
/// StepTooLong from exp_map.
VertexConfig realize_vertices(const AngularConfig& cfg);

/// Angular view of vc from p: lengths are distances p->R, directions the
/// frame angles of log_map(p, R) rotated so theta[A] = 0 (rotation kept in
/// frame_offset). realize_vertices(extract_angular(vc, p)) reproduces the
/// vertices within 1e-10.
AngularConfig extract_angular(const VertexConfig& vc, const SurfacePoint& p);

/// Classifies where the basepoint sits relative to the quadrilateral, with a
/// 1e-9 band around the collinear cases.
Position convexity_check(const AngularConfig& cfg);

bool on_diagonal_bd(const AngularConfig& cfg);
bool on_diagonal_ac(const AngularConfig& cfg);

/// k > 0 validity: every arc below pi/sqrt(k) and the perimeter overestimate
/// 2*sum(l_R) below 2*pi/sqrt(k). Throws PerimeterTooLarge / StepTooLong.
void validate_scale(const AngularConfig& cfg);

}  // namespace wftq
