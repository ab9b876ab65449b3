#pragma once

#include <array>
#include <limits>

#include "wftq/errors.hpp"
#include "wftq/vec.hpp"

namespace wftq {

/// Gaussian curvature of the model plane, in 1/length^2. The sign selects the
/// model: k > 0 the sphere of radius 1/sqrt(k), k = 0 the Euclidean plane,
/// k < 0 the hyperbolic plane. |k| below kFlatThreshold is treated as flat so
/// callers may vary k continuously through zero.
struct Curvature {
    double k = 0.0;

    static constexpr double kFlatThreshold = 1e-12;

    bool flat() const { return std::abs(k) < kFlatThreshold; }
    bool spherical() const { return k >= kFlatThreshold; }
    bool hyperbolic() const { return k <= -kFlatThreshold; }

    /// Model radius 1/sqrt(|k|); infinity when flat.
    double radius() const {
        return flat() ? std::numeric_limits<double>::infinity()
                      : 1.0 / std::sqrt(std::abs(k));
    }

    /// Largest admissible geodesic length: pi/sqrt(k) on the sphere,
    /// unbounded otherwise.
    double max_arc() const {
        return spherical() ? 3.14159265358979323846 * radius()
                           : std::numeric_limits<double>::infinity();
    }
};

/// Point on the model plane in canonical coordinates.
///   flat:       (x, y, 0)
///   sphere:     unit vector in R^3 (the model radius is implied by Curvature)
///   hyperbolic: hyperboloid coordinates (x0, x1, x2), x0^2 - x1^2 - x2^2 = 1,
///               x0 > 0 (again unit-model, radius implied by Curvature)
struct SurfacePoint {
    std::array<double, 3> c{0.0, 0.0, 0.0};
};

/// Tangent vector at `base`, stored as components in the canonical
/// orthonormal frame at `base` (see canonical_frame_angles in kplane.cpp for
/// the frame convention). Components carry length units.
struct TangentVector {
    SurfacePoint base;
    Vec2 v;
};

inline double norm(const TangentVector& t) { return norm(t.v); }

/// Canonical origin of the model: (0,0) / north pole / hyperboloid apex.
SurfacePoint model_origin(Curvature k);

SurfacePoint euclidean_point(double x, double y);
/// Normalizes the input to the unit sphere; throws InvalidScene off-sphere
/// beyond 1e-12.
SurfacePoint sphere_point(double x, double y, double z);
/// Validates the Minkowski form within 1e-12 (scale-relative) and x0 > 0.
SurfacePoint hyperboloid_point(double x0, double x1, double x2);

/// Throws InvalidScene when p is not a valid point for model k.
void validate_point(Curvature k, const SurfacePoint& p);

bool points_equal(Curvature k, const SurfacePoint& p, const SurfacePoint& q,
                  double tol = 1e-12);

/// Geodesic distance. Symmetric, zero iff p = q. Throws AntipodalPoints on
/// the sphere when p and q are within 1e-9 of antipodal.
double distance(Curvature k, const SurfacePoint& p, const SurfacePoint& q);

/// Point at distance |v| from base along the geodesic with initial
/// direction v. Throws StepTooLong on the sphere when |v| reaches pi/sqrt(k).
SurfacePoint exp_map(Curvature k, const SurfacePoint& base,
                     const TangentVector& v);

/// Inverse of exp_map: |result| = distance(base, target) and
/// exp_map(base, result) = target. Throws AntipodalPoints as distance does.
TangentVector log_map(Curvature k, const SurfacePoint& base,
                      const SurfacePoint& target);

/// Unsigned angle in [0, pi] between the shortest arcs vertex->p and
/// vertex->q. Throws DegenerateArc when p or q coincides with vertex.
double angle_at(Curvature k, const SurfacePoint& vertex, const SurfacePoint& p,
                const SurfacePoint& q);

/// Angle opposite side c of the geodesic triangle with sides (a, b, c), by
/// the law of cosines of the model. Sides below 1e-8 * radius fall back to
/// the Euclidean formula. Throws TriangleInequalityViolated, and
/// PerimeterTooLarge when k > 0 and a + b + c >= 2*pi/sqrt(k).
double loc_angle_from_sides(Curvature k, double a, double b, double c);

/// Third side of the geodesic triangle with sides a, b and included angle
/// gamma. Throws StepTooLong when k > 0 and a or b reaches pi/sqrt(k).
double loc_side_from_sides_angle(Curvature k, double a, double b,
                                 double gamma);

}  // namespace wftq
