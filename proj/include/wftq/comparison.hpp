#pragma once

#include <array>
#include <optional>

#include "wftq/config.hpp"
#include "wftq/inverse.hpp"

namespace wftq {

enum class GlueCase { MPrime, MDoublePrime };

constexpr const char* glue_case_name(GlueCase c) {
    return c == GlueCase::MPrime ? "mprime" : "mdoubleprime";
}

/// Comparison-triangle angle transfer: same side lengths (a, b and the third
/// side computed on k_source), angle at the apex re-measured on k_target.
/// epsilon = gamma - angle_target is positive when k_target < k_source.
struct ComparisonAngle {
    double angle_target = 0.0;
    double epsilon = 0.0;
    double third_side = 0.0;
};

ComparisonAngle comparison_angle(Curvature k_source, Curvature k_target,
                                 double a, double b, double gamma);

/// Gluing record. epsilon holds the normalized shifts (e1..e4, all >= 0,
/// applied with per-case signs to the gaps); epsilon_raw the shifts before
/// the 2-pi normalization; raw_defect the angle-sum defect they imply. The
/// normalization bisects s in [0,1] with k2(s) = k + s*(k2 - k) until the
/// intended gap sum returns to 2*pi (angle_sum_defect, < 1e-10 at the root).
struct GlueSpec {
    GlueCase glue_case = GlueCase::MPrime;
    double k_source = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    double k2_effective = 0.0;
    double s = 0.0;
    std::array<double, 4> epsilon{};
    std::array<double, 4> epsilon_raw{};
    double raw_defect = 0.0;
    double angle_sum_defect = 0.0;
};

struct GlueResult {
    GlueSpec spec;
    AngularConfig perturbed;
};

/// Glues comparison triangles around the basepoint. MPrime sends the
/// (A,D) and (D,C) triangles to k1 and (C,B), (B,A) to k2; MDoublePrime keeps
/// (A,D), (D,C) on the source plane (their gaps stay bit-identical), sends
/// (C,B) to k1 and (B,A) to k2. Requires k1 <= cfg.k <= k2 and an Interior
/// configuration. Throws NoRoot when no s in [0,1] closes the angle sum.
GlueResult glue_quad(const AngularConfig& cfg, GlueCase glue_case,
                     Curvature k1, Curvature k2);

/// Plasticity lines of the source and glued configurations, the coefficient
/// deltas (summing to zero), and the quotients of weight ratios between the
/// two lines evaluated at a matched w_D (the midpoint of the intersection of
/// both positivity intervals unless one is supplied).
struct ComparativePlasticityReport {
    PlasticityLine original;
    PlasticityLine glued;
    std::array<double, 3> delta_a{};
    std::array<std::array<double, 4>, 4> ratio_quotient{};
    double matched_wd = 0.0;
};

ComparativePlasticityReport comparative_plasticity(
    const AngularConfig& original, const AngularConfig& glued, double c,
    std::optional<double> w_d = std::nullopt);

}  // namespace wftq
