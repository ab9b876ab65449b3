#include "wftq/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace wftq {

namespace {

constexpr double kDirectTol = 1e-10;

double default_tol(const AngularConfig& cfg, double tol) {
    if (tol > 0.0) return tol;
    return 1e-9 * *std::max_element(cfg.weight.begin(), cfg.weight.end());
}

ParallelogramReport report_from(ParClass cls, std::array<Vec2, 4> corners,
                                double tol) {
    ParallelogramReport rep;
    rep.cls = cls;
    rep.corners = corners;
    for (int i = 0; i < 4; ++i)
        rep.side_length[i] = norm(corners[(i + 1) % 4] - corners[i]);
    Vec2 m02 = 0.5 * (corners[0] + corners[2]);
    Vec2 m13 = 0.5 * (corners[1] + corners[3]);
    rep.diagonal_midpoint_gap = norm(m02 - m13);
    rep.opposite_side_mismatch =
        std::max(std::abs(rep.side_length[0] - rep.side_length[2]),
                 std::abs(rep.side_length[1] - rep.side_length[3]));
    rep.is_parallelogram = rep.opposite_side_mismatch <= tol &&
                           rep.diagonal_midpoint_gap <= tol;
    return rep;
}

bool strictly_ordered(double w0, double w1, double w2, double w3) {
    return w0 > w1 && w1 > w2 && w2 > w3;
}

bool direct_pattern(const AngularConfig& cfg) {
    return std::abs(cfg.weight[0] - cfg.weight[2]) <= kDirectTol &&
           std::abs(cfg.weight[1] - cfg.weight[3]) <= kDirectTol &&
           convexity_check(cfg) == Position::OnBothDiagonals;
}

}  // namespace

TangentImage tangent_image(const AngularConfig& cfg) {
    TangentImage img;
    for (int i = 0; i < 4; ++i)
        img.point[i] = polar(cfg.weight[i], cfg.theta[i]);
    return img;
}

ParallelogramReport symmetrize(const AngularConfig& cfg, ClassChoice choice,
                               double tol) {
    const auto& w = cfg.weight;
    ParClass cls;
    switch (choice) {
        case ClassChoice::A:
            cls = ParClass::A;
            break;
        case ClassChoice::B:
            cls = ParClass::B;
            break;
        default:
            if (strictly_ordered(w[1], w[0], w[3], w[2]))
                cls = ParClass::A;
            else if (strictly_ordered(w[0], w[1], w[2], w[3]))
                cls = ParClass::B;
            else if (direct_pattern(cfg))
                return direct_parallelogram_check(cfg, tol);
            else
                throw NoClassApplicable(
                    "weights match neither strict ordering");
    }
    TangentImage img = tangent_image(cfg);
    std::array<Vec2, 4> corners = img.point;
    if (cls == ParClass::A) {
        corners[0] = -corners[0];  // A'*
        corners[2] = -corners[2];  // C'*
    } else {
        corners[1] = -corners[1];  // B'*
        corners[3] = -corners[3];  // D'*
    }
    return report_from(cls, corners, default_tol(cfg, tol));
}

ParallelogramReport direct_parallelogram_check(const AngularConfig& cfg,
                                               double tol) {
    if (!direct_pattern(cfg))
        throw PatternMismatch(
            "direct case needs w_A = w_C, w_B = w_D on both diagonals");
    TangentImage img = tangent_image(cfg);
    return report_from(ParClass::Direct, img.point, default_tol(cfg, tol));
}

}  // namespace wftq
