#include "wftq/kplane.hpp"

#include <algorithm>
#include <cmath>

namespace wftq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAntipodalTol = 1e-9;
constexpr double kPoleTol = 1e-9;
// Below this fraction of the model radius the curved laws of cosines are
// ill-conditioned; Euclidean formulas are exact to within the same error.
constexpr double kShortArcFraction = 1e-8;

struct V3 {
    double a, b, c;
};

V3 v3(const SurfacePoint& p) { return {p.c[0], p.c[1], p.c[2]}; }
SurfacePoint pt(V3 v) { return SurfacePoint{{v.a, v.b, v.c}}; }

V3 operator+(V3 x, V3 y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
V3 operator-(V3 x, V3 y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }
V3 operator*(double s, V3 x) { return {s * x.a, s * x.b, s * x.c}; }

double edot(V3 x, V3 y) { return x.a * y.a + x.b * y.b + x.c * y.c; }
double enorm(V3 x) { return std::sqrt(edot(x, x)); }
V3 ecross(V3 x, V3 y) {
    return {x.b * y.c - x.c * y.b, x.c * y.a - x.a * y.c,
            x.a * y.b - x.b * y.a};
}

// Minkowski form with signature (+,-,-); hyperboloid points have mdot = 1,
// their tangents mdot = -1.
double mdot(V3 x, V3 y) { return x.a * y.a - x.b * y.b - x.c * y.c; }

// acosh(1 + u) without the cancellation of forming 1 + u first.
double acosh1p(double u) {
    u = std::max(0.0, u);
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

// Canonical frame at p on the sphere: e1 the tangential north direction
// (Gram-Schmidt of the pole axis, written in the cancellation-free closed
// form via s = hypot(p_x, p_y)), e2 the east direction. A fixed axis-aligned
// fallback applies within 1e-9 of a pole so the frame stays reproducible.
void sphere_frame(V3 p, V3& e1, V3& e2) {
    double s = std::hypot(p.a, p.b);
    if (s < kPoleTol) {
        // Per-pole fallback with the same handedness as the (north, east)
        // field (det[p, e1, e2] = -1), so configurations realized at one
        // point extract with consistent orientation anywhere else.
        e1 = {1.0, 0.0, 0.0};
        e2 = {0.0, p.c > 0.0 ? -1.0 : 1.0, 0.0};
        return;
    }
    e1 = {-p.c * p.a / s, -p.c * p.b / s, s};
    e2 = {-p.b / s, p.a / s, 0.0};
}

// Analogous frame on the hyperboloid from the time-axis direction. With
// s = hypot(p1, p2) and p0^2 - s^2 = 1 these closed forms are exact; the
// naive Gram-Schmidt divides by sqrt(p0^2 - 1), which underflows near the
// apex while s is still above the fallback threshold.
void hyper_frame(V3 p, V3& e1, V3& e2) {
    double s = std::hypot(p.b, p.c);
    if (s < kPoleTol) {
        // Matches the handedness of the closed-form field below.
        e1 = {0.0, 1.0, 0.0};
        e2 = {0.0, 0.0, -1.0};
        return;
    }
    e1 = {-s, -p.a * p.b / s, -p.a * p.c / s};
    e2 = {0.0, -p.c / s, p.b / s};  // J(p x e1)
}

V3 renorm_sphere(V3 q) { return (1.0 / enorm(q)) * q; }

V3 renorm_hyper(V3 q) {
    q.a = std::sqrt(1.0 + q.b * q.b + q.c * q.c);
    return q;
}

double sphere_angle(V3 p, V3 q) {
    return std::atan2(enorm(ecross(p, q)), edot(p, q));
}

// m - 1 for m = mdot(p,q), computed from the difference vector so that small
// separations do not cancel.
double hyper_cosh_minus_one(V3 p, V3 q) {
    V3 d = p - q;
    return std::max(0.0, 0.5 * (d.b * d.b + d.c * d.c - d.a * d.a));
}

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

SurfacePoint model_origin(Curvature k) {
    if (k.spherical()) return SurfacePoint{{0.0, 0.0, 1.0}};
    if (k.hyperbolic()) return SurfacePoint{{1.0, 0.0, 0.0}};
    return SurfacePoint{};
}

SurfacePoint euclidean_point(double x, double y) {
    return SurfacePoint{{x, y, 0.0}};
}

SurfacePoint sphere_point(double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    if (!(std::abs(n - 1.0) <= 1e-12))
        throw InvalidScene("sphere point is not a unit vector");
    return SurfacePoint{{x / n, y / n, z / n}};
}

SurfacePoint hyperboloid_point(double x0, double x1, double x2) {
    SurfacePoint p{{x0, x1, x2}};
    validate_point(Curvature{-1.0}, p);
    return p;
}

void validate_point(Curvature k, const SurfacePoint& p) {
    for (double x : p.c)
        if (!std::isfinite(x)) throw InvalidScene("non-finite coordinate");
    if (k.spherical()) {
        if (std::abs(enorm(v3(p)) - 1.0) > 1e-12)
            throw InvalidScene("sphere point is not a unit vector");
    } else if (k.hyperbolic()) {
        V3 v = v3(p);
        double scale = std::max(1.0, edot(v, v));
        if (std::abs(mdot(v, v) - 1.0) > 1e-12 * scale || v.a <= 0.0)
            throw InvalidScene("point is not on the upper hyperboloid");
    }
}

bool points_equal(Curvature k, const SurfacePoint& p, const SurfacePoint& q,
                  double tol) {
    (void)k;
    return enorm(v3(p) - v3(q)) <= tol;
}

double distance(Curvature k, const SurfacePoint& p, const SurfacePoint& q) {
    if (k.flat()) return std::hypot(p.c[0] - q.c[0], p.c[1] - q.c[1]);
    double r = k.radius();
    if (k.spherical()) {
        V3 a = v3(p), b = v3(q);
        if (enorm(a + b) < kAntipodalTol)
            throw AntipodalPoints("points are antipodal on the sphere");
        return r * sphere_angle(a, b);
    }
    return r * acosh1p(hyper_cosh_minus_one(v3(p), v3(q)));
}

SurfacePoint exp_map(Curvature k, const SurfacePoint& base,
                     const TangentVector& tv) {
    double t = norm(tv.v);
    if (k.flat())
        return euclidean_point(base.c[0] + tv.v.x, base.c[1] + tv.v.y);
    double r = k.radius();
    double phi = t / r;
    if (t == 0.0) return base;
    V3 p = v3(base), e1, e2;
    if (k.spherical()) {
        if (phi >= kPi - kAntipodalTol)
            throw StepTooLong("geodesic step reaches the antipode");
        sphere_frame(p, e1, e2);
        V3 dir = (1.0 / t) * (tv.v.x * e1 + tv.v.y * e2);
        return pt(renorm_sphere(std::cos(phi) * p + std::sin(phi) * dir));
    }
    hyper_frame(p, e1, e2);
    V3 dir = (1.0 / t) * (tv.v.x * e1 + tv.v.y * e2);
    return pt(renorm_hyper(std::cosh(phi) * p + std::sinh(phi) * dir));
}

TangentVector log_map(Curvature k, const SurfacePoint& base,
                      const SurfacePoint& target) {
    TangentVector out;
    out.base = base;
    if (k.flat()) {
        out.v = {target.c[0] - base.c[0], target.c[1] - base.c[1]};
        return out;
    }
    double r = k.radius();
    V3 p = v3(base), q = v3(target), e1, e2;
    if (k.spherical()) {
        if (enorm(p + q) < kAntipodalTol)
            throw AntipodalPoints("log map undefined at the antipode");
        double phi = sphere_angle(p, q);
        if (phi == 0.0) return out;
        V3 w = q - edot(p, q) * p;
        double wn = enorm(w);
        if (wn == 0.0) return out;
        sphere_frame(p, e1, e2);
        double t = r * phi;
        out.v = {t * edot(w, e1) / wn, t * edot(w, e2) / wn};
        return out;
    }
    double u = hyper_cosh_minus_one(p, q);
    double phi = acosh1p(u);
    if (phi == 0.0) return out;
    double m = mdot(p, q);
    V3 w = q - m * p;  // spacelike, mdot(w,w) = 1 - m^2
    double wn = std::sqrt(u * (u + 2.0));  // sqrt(m^2 - 1) without underflow
    if (wn == 0.0) return out;
    hyper_frame(p, e1, e2);
    double t = r * phi;
    // Components in a spacelike basis pick up a sign from mdot(e_i,e_i) = -1.
    out.v = {-t * mdot(w, e1) / wn, -t * mdot(w, e2) / wn};
    return out;
}

double angle_at(Curvature k, const SurfacePoint& vertex, const SurfacePoint& p,
                const SurfacePoint& q) {
    TangentVector vp = log_map(k, vertex, p);
    TangentVector vq = log_map(k, vertex, q);
    if (norm(vp) == 0.0 || norm(vq) == 0.0)
        throw DegenerateArc("angle vertex coincides with an endpoint");
    return std::atan2(std::abs(cross(vp.v, vq.v)), dot(vp.v, vq.v));
}

double loc_angle_from_sides(Curvature k, double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || c < 0.0)
        throw TriangleInequalityViolated("sides must be positive");
    double scale = a + b + c;
    if (c > a + b + 1e-12 * scale || c < std::abs(a - b) - 1e-12 * scale)
        throw TriangleInequalityViolated("sides violate the triangle inequality");
    double r = k.radius();
    bool short_arc = !k.flat() && std::max({a, b, c}) < kShortArcFraction * r;
    if (k.flat() || short_arc)
        return std::acos(clamp1((a * a + b * b - c * c) / (2.0 * a * b)));
    if (k.spherical()) {
        if (a + b + c >= 2.0 * kPi * r)
            throw PerimeterTooLarge("triangle perimeter reaches 2*pi/sqrt(k)");
        double sa = a / r, sb = b / r, sc = c / r;
        double num = std::cos(sc) - std::cos(sa) * std::cos(sb);
        double den = std::sin(sa) * std::sin(sb);
        return std::acos(clamp1(num / den));
    }
    double sa = a / r, sb = b / r, sc = c / r;
    double num = std::cosh(sa) * std::cosh(sb) - std::cosh(sc);
    double den = std::sinh(sa) * std::sinh(sb);
    return std::acos(clamp1(num / den));
}

double loc_side_from_sides_angle(Curvature k, double a, double b,
                                 double gamma) {
    if (!(a > 0.0) || !(b > 0.0))
        throw TriangleInequalityViolated("sides must be positive");
    if (!(gamma >= 0.0 && gamma <= kPi))
        throw TriangleInequalityViolated("included angle outside [0, pi]");
    double r = k.radius();
    bool short_arc = !k.flat() && std::max(a, b) < kShortArcFraction * r;
    if (k.flat() || short_arc) {
        double s = std::sin(0.5 * gamma);
        double d = a - b;
        return std::sqrt(d * d + 4.0 * a * b * s * s);
    }
    if (k.spherical()) {
        if (a >= kPi * r || b >= kPi * r)
            throw StepTooLong("side reaches pi/sqrt(k)");
        double sa = a / r, sb = b / r;
        double cc = std::cos(sa) * std::cos(sb) +
                    std::sin(sa) * std::sin(sb) * std::cos(gamma);
        return r * std::acos(clamp1(cc));
    }
    double sa = a / r, sb = b / r;
    double ch = std::cosh(sa) * std::cosh(sb) -
                std::sinh(sa) * std::sinh(sb) * std::cos(gamma);
    return r * acosh1p(std::max(0.0, ch - 1.0));
}

}  // namespace wftq
