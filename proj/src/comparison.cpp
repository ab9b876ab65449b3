#include "wftq/comparison.hpp"

#include <cmath>

namespace wftq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kDefectTol = 1e-10;

// Sub-triangle (R, S) at the basepoint: sides l_R, l_S, included gap.
struct SubTriangle {
    double a, b, gamma;
};

std::array<SubTriangle, 4> sub_triangles(const AngularConfig& cfg) {
    auto g = cfg.gaps();
    const auto& l = cfg.length;
    // Gluing order: (A,D), (D,C), (C,B), (B,A).
    return {SubTriangle{l[0], l[3], g[3]}, SubTriangle{l[3], l[2], g[2]},
            SubTriangle{l[2], l[1], g[1]}, SubTriangle{l[1], l[0], g[0]}};
}

}  // namespace

ComparisonAngle comparison_angle(Curvature k_source, Curvature k_target,
                                 double a, double b, double gamma) {
    ComparisonAngle out;
    out.third_side = loc_side_from_sides_angle(k_source, a, b, gamma);
    if (k_target.k == k_source.k) {
        // Comparison triangle of itself: same angle, exactly.
        out.angle_target = gamma;
        out.epsilon = 0.0;
        return out;
    }
    out.angle_target = loc_angle_from_sides(k_target, a, b, out.third_side);
    out.epsilon = gamma - out.angle_target;
    return out;
}

GlueResult glue_quad(const AngularConfig& cfg, GlueCase glue_case,
                     Curvature k1, Curvature k2) {
    if (!(k1.k <= cfg.k.k && cfg.k.k <= k2.k))
        throw InvalidScene("gluing requires k1 <= scene curvature <= k2");
    if (convexity_check(cfg) != Position::Interior)
        throw InvalidScene("gluing requires an interior configuration");
    validate_scale(cfg);

    auto tris = sub_triangles(cfg);

    // Shifts of the triangles pinned to k1 (or to the source plane for the
    // M'' case) do not depend on the interpolation.
    std::array<double, 4> eps_fixed{};
    if (glue_case == GlueCase::MPrime) {
        eps_fixed[0] =
            comparison_angle(cfg.k, k1, tris[0].a, tris[0].b, tris[0].gamma)
                .epsilon;
        eps_fixed[1] =
            comparison_angle(cfg.k, k1, tris[1].a, tris[1].b, tris[1].gamma)
                .epsilon;
        eps_fixed[2] = 0.0;  // recomputed per s below
    } else {
        eps_fixed[0] = 0.0;
        eps_fixed[1] = 0.0;
        eps_fixed[2] =
            comparison_angle(cfg.k, k1, tris[2].a, tris[2].b, tris[2].gamma)
                .epsilon;
    }

    auto eps_at = [&](double s) {
        Curvature k2s{cfg.k.k + s * (k2.k - cfg.k.k)};
        std::array<double, 4> e = eps_fixed;
        if (glue_case == GlueCase::MPrime)
            e[2] = -comparison_angle(cfg.k, k2s, tris[2].a, tris[2].b,
                                     tris[2].gamma)
                        .epsilon;
        e[3] = -comparison_angle(cfg.k, k2s, tris[3].a, tris[3].b,
                                 tris[3].gamma)
                    .epsilon;
        return e;
    };
    auto defect_of = [&](const std::array<double, 4>& e) {
        if (glue_case == GlueCase::MPrime)
            return -e[0] - e[1] + e[2] + e[3];
        return -e[2] + e[3];
    };

    std::array<double, 4> eps_raw = eps_at(1.0);
    double defect_lo = defect_of(eps_at(0.0));
    double defect_hi = defect_of(eps_raw);

    GlueSpec spec;
    spec.glue_case = glue_case;
    spec.k_source = cfg.k.k;
    spec.k1 = k1.k;
    spec.k2 = k2.k;
    spec.epsilon_raw = eps_raw;
    spec.raw_defect = defect_hi;

    double s = 1.0;
    std::array<double, 4> eps = eps_raw;
    double defect = defect_hi;
    if (std::abs(defect_hi) > kDefectTol) {
        if (std::abs(defect_lo) <= kDefectTol) {
            s = 0.0;
            eps = eps_at(0.0);
            defect = defect_lo;
        } else if (defect_lo * defect_hi > 0.0) {
            throw NoRoot("gluing defect keeps one sign over the interpolation",
                         defect_lo, defect_hi);
        } else {
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 200 && std::abs(defect) > kDefectTol; ++it) {
                s = 0.5 * (lo + hi);
                eps = eps_at(s);
                defect = defect_of(eps);
                // defect is nondecreasing in s (angle comparison).
                (defect < 0.0 ? lo : hi) = s;
            }
        }
    }

    spec.s = s;
    spec.k2_effective = cfg.k.k + s * (k2.k - cfg.k.k);
    spec.epsilon = eps;
    spec.angle_sum_defect = defect;

    AngularConfig pert = cfg;
    if (glue_case == GlueCase::MPrime) {
        auto g = cfg.gaps();
        // Accumulate the intended gaps from A; the DA gap absorbs the
        // residual defect.
        double ab = g[0] + eps[3];
        double bc = g[1] + eps[2];
        double cd = g[2] - eps[1];
        pert.theta = {0.0, ab, ab + bc, ab + bc + cd};
    } else {
        // Anchor C and D so the two unshifted gaps stay bit-identical.
        double gap_bc = (cfg.theta[2] - cfg.theta[1]) - eps[2];
        pert.theta = {0.0, cfg.theta[2] - gap_bc, cfg.theta[2], cfg.theta[3]};
    }
    return {spec, pert};
}

ComparativePlasticityReport comparative_plasticity(
    const AngularConfig& original, const AngularConfig& glued, double c,
    std::optional<double> w_d) {
    if (convexity_check(original) != Position::Interior ||
        convexity_check(glued) != Position::Interior)
        throw InvalidScene("comparative plasticity needs interior configurations");
    ComparativePlasticityReport rep;
    rep.original = plasticity_line(original, c);
    rep.glued = plasticity_line(glued, c);
    for (int i = 0; i < 3; ++i)
        rep.delta_a[i] = rep.glued.a[i] - rep.original.a[i];

    Interval common{
        std::max(rep.original.positivity.lo, rep.glued.positivity.lo),
        std::min(rep.original.positivity.hi, rep.glued.positivity.hi)};
    rep.matched_wd = w_d.value_or(common.empty() ? 0.0 : common.midpoint());
    auto wo = rep.original.at(rep.matched_wd);
    auto wg = rep.glued.at(rep.matched_wd);
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            rep.ratio_quotient[r][s] =
                (r == s) ? 1.0 : (wg[r] / wg[s]) / (wo[r] / wo[s]);
    return rep;
}

}  // namespace wftq
