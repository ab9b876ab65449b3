#include "wftq/config.hpp"

#include <cmath>

namespace wftq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kBoundaryTol = 1e-9;

double wrap_2pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

double wrap_pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a > kPi) a -= kTwoPi;
    if (a <= -kPi) a += kTwoPi;
    return a;
}

}  // namespace

AngularConfig AngularConfig::make(Curvature k, std::array<double, 4> directions,
                                  std::array<double, 4> lengths,
                                  std::array<double, 4> weights,
                                  const SurfacePoint& basepoint) {
    validate_point(k, basepoint);
    for (int i = 0; i < 4; ++i) {
        if (!(lengths[i] > 0.0) || !std::isfinite(lengths[i]))
            throw InvalidScene("arc lengths must be positive");
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
            throw InvalidScene("weights must be positive");
        if (!std::isfinite(directions[i]))
            throw InvalidScene("directions must be finite");
    }
    AngularConfig cfg;
    cfg.k = k;
    cfg.length = lengths;
    cfg.weight = weights;
    cfg.basepoint = basepoint;
    cfg.frame_offset = directions[0];
    cfg.theta[0] = 0.0;
    for (int i = 1; i < 4; ++i)
        cfg.theta[i] = wrap_2pi(directions[i] - directions[0]);
    // Labels assert counterclockwise order; validate instead of sorting.
    // Coincident directions are admitted and classify as NotInterior.
    if (cfg.theta[1] > cfg.theta[2] || cfg.theta[2] > cfg.theta[3])
        throw InvalidScene("directions are not in counterclockwise A,B,C,D order");
    return cfg;
}

AngularConfig AngularConfig::make(Curvature k, std::array<double, 4> directions,
                                  std::array<double, 4> lengths,
                                  std::array<double, 4> weights) {
    return make(k, directions, lengths, weights, model_origin(k));
}

std::array<double, 4> AngularConfig::gaps() const {
    return {theta[1] - theta[0], theta[2] - theta[1], theta[3] - theta[2],
            kTwoPi - theta[3]};
}

VertexConfig VertexConfig::make(Curvature k,
                                std::array<SurfacePoint, 4> vertices,
                                std::array<double, 4> weights) {
    VertexConfig vc;
    vc.k = k;
    vc.vertex = vertices;
    vc.weight = weights;
    for (int i = 0; i < 4; ++i) {
        validate_point(k, vertices[i]);
        if (!(weights[i] > 0.0)) throw InvalidScene("weights must be positive");
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (points_equal(k, vertices[i], vertices[j], 1e-12))
                throw InvalidScene("vertices must be pairwise distinct");
    return vc;
}

double signed_angle(const AngularConfig& cfg, VertexId from, VertexId to) {
    return wrap_pi(cfg.theta_of(to) - cfg.theta_of(from));
}

VertexConfig realize_vertices(const AngularConfig& cfg) {
    std::array<SurfacePoint, 4> verts;
    for (int i = 0; i < 4; ++i) {
        TangentVector tv{cfg.basepoint,
                         polar(cfg.length[i], cfg.frame_offset + cfg.theta[i])};
        verts[i] = exp_map(cfg.k, cfg.basepoint, tv);
    }
    return VertexConfig::make(cfg.k, verts, cfg.weight);
}

AngularConfig extract_angular(const VertexConfig& vc, const SurfacePoint& p) {
    std::array<double, 4> dirs, lens;
    for (int i = 0; i < 4; ++i) {
        TangentVector tv = log_map(vc.k, p, vc.vertex[i]);
        lens[i] = norm(tv);
        if (lens[i] == 0.0)
            throw DegenerateArc("basepoint coincides with a vertex");
        dirs[i] = std::atan2(tv.v.y, tv.v.x);
    }
    return AngularConfig::make(vc.k, dirs, lens, vc.weight, p);
}

Position convexity_check(const AngularConfig& cfg) {
    auto g = cfg.gaps();
    for (double gi : g)
        if (gi <= kBoundaryTol) return Position::NotInterior;
    double diag_bd = cfg.theta[3] - cfg.theta[1];  // angle B-P_F-D
    double diag_ac = cfg.theta[2];                 // angle A-P_F-C
    bool bd = std::abs(diag_bd - kPi) <= kBoundaryTol;
    bool ac = std::abs(diag_ac - kPi) <= kBoundaryTol;
    if (bd && ac) return Position::OnBothDiagonals;
    if (bd) {
        // The non-diagonal gaps still have to keep the basepoint off the
        // sides of the quadrilateral.
        if (g[0] < kPi - kBoundaryTol && g[3] < kPi - kBoundaryTol)
            return Position::OnDiagonalBD;
        return Position::NotInterior;
    }
    for (double gi : g)
        if (gi >= kPi - kBoundaryTol) return Position::NotInterior;
    return Position::Interior;
}

bool on_diagonal_bd(const AngularConfig& cfg) {
    return std::abs((cfg.theta[3] - cfg.theta[1]) - kPi) <= kBoundaryTol;
}

bool on_diagonal_ac(const AngularConfig& cfg) {
    return std::abs(cfg.theta[2] - kPi) <= kBoundaryTol;
}

void validate_scale(const AngularConfig& cfg) {
    if (!cfg.k.spherical()) return;
    double max_arc = cfg.k.max_arc();
    double sum = 0.0;
    for (double l : cfg.length) {
        if (l >= max_arc) throw StepTooLong("arc length reaches pi/sqrt(k)");
        sum += l;
    }
    // Perimeter overestimate by the triangle inequality: each side of ABCD
    // is at most the sum of its two arcs.
    if (2.0 * sum >= 2.0 * max_arc)
        throw PerimeterTooLarge("perimeter bound 2*pi/sqrt(k) exceeded");
}

}  // namespace wftq
