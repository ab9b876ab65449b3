#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wftq/kplane.hpp"

using namespace wftq;
using namespace wftq::test;

namespace {

// Rotation of the north pole by angle phi about the axis orthogonal to the
// step direction: the oracle for exp_map on the sphere.
SurfacePoint rotate_from_pole(double phi, double alpha) {
    return SurfacePoint{
        {std::sin(phi) * std::cos(alpha), std::sin(phi) * std::sin(alpha),
         std::cos(phi)}};
}

TangentVector tv(const SurfacePoint& base, double x, double y) {
    return TangentVector{base, {x, y}};
}

}  // namespace

TEST_CASE("euclidean distance and maps") {
    Curvature k{0.0};
    CHECK(distance(k, euclidean_point(0, 0), euclidean_point(3, 4)) ==
          doctest::Approx(5.0));
    SurfacePoint p = exp_map(k, euclidean_point(1, 1), tv(euclidean_point(1, 1), 2, 0));
    CHECK(p.c[0] == doctest::Approx(3.0));
    CHECK(p.c[1] == doctest::Approx(1.0));
    TangentVector l = log_map(k, euclidean_point(0, 0), euclidean_point(0, 5));
    CHECK(l.v.x == doctest::Approx(0.0));
    CHECK(l.v.y == doctest::Approx(5.0));
}

TEST_CASE("sphere distance quarter circle and antipodal error") {
    Curvature k{1.0};
    SurfacePoint pole = model_origin(k);
    SurfacePoint eq = sphere_point(1, 0, 0);
    CHECK(distance(k, pole, eq) == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(distance(k, eq, sphere_point(-1, 0, 0)), AntipodalPoints);
    CHECK_THROWS_AS(log_map(k, eq, sphere_point(-1, 0, 0)), AntipodalPoints);
}

TEST_CASE("zero step is the identity at every curvature") {
    for (double kk : {-1.0, 0.0, 1.0}) {
        Curvature k{kk};
        SurfacePoint o = model_origin(k);
        SurfacePoint p = exp_map(k, o, tv(o, 0, 0));
        CHECK(points_equal(k, p, o));
        CHECK(distance(k, p, o) == 0.0);
    }
}

TEST_CASE("sphere exp against the rotation oracle") {
    // Rotating the pole by phi about an axis orthogonal to the step lands on
    // the phi-colatitude circle; a quarter arc reaches the equator. The
    // azimuth depends on the frame convention, so the oracle checks are the
    // frame-independent ones: colatitude, arc length, and that azimuthal
    // separations equal the tangent-angle separations.
    Curvature k{1.0};
    SurfacePoint pole = model_origin(k);
    double phi = kPi / 2;
    SurfacePoint prev;
    bool have_prev = false;
    double prev_alpha = 0.0;
    for (double alpha : {0.0, 0.7, 2.1, 4.0}) {
        SurfacePoint got =
            exp_map(k, pole, tv(pole, phi * std::cos(alpha), phi * std::sin(alpha)));
        SurfacePoint want = rotate_from_pole(phi, alpha);
        CHECK(std::abs(got.c[2]) < 1e-12);                   // on the equator
        CHECK(std::abs(want.c[2] - got.c[2]) < 1e-12);
        CHECK(distance(k, pole, got) == doctest::Approx(phi).epsilon(1e-12));
        if (have_prev)
            CHECK(angle_at(k, pole, prev, got) ==
                  doctest::Approx(alpha - prev_alpha).epsilon(1e-12));
        prev = got;
        prev_alpha = alpha;
        have_prev = true;
    }
    CHECK_THROWS_AS(exp_map(k, pole, tv(pole, kPi, 0)), StepTooLong);
}

TEST_CASE("hyperbolic exp/distance consistency at length 2") {
    Curvature k{-1.0};
    SurfacePoint o = model_origin(k);
    SurfacePoint q = exp_map(k, o, tv(o, 2 * std::cos(1.2), 2 * std::sin(1.2)));
    CHECK(distance(k, o, q) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("exp/log inverse pair on random vectors") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> comp(-1.5, 1.5);
    std::uniform_real_distribution<double> basepick(-0.8, 0.8);
    for (double kk : {-1.0, 0.0, 1.0}) {
        Curvature k{kk};
        for (int trial = 0; trial < 100; ++trial) {
            SurfacePoint base = model_origin(k);
            // Move the base off the origin so frames are exercised.
            base = exp_map(k, base, tv(base, basepick(rng), basepick(rng)));
            double x = comp(rng), y = comp(rng);
            if (kk > 0) {
                x *= 0.9;
                y *= 0.9;
            } else if (kk < 0) {
                // vectors up to length 3
                x *= 1.4;
                y *= 1.4;
            }
            SurfacePoint q = exp_map(k, base, tv(base, x, y));
            CHECK(distance(k, base, q) ==
                  doctest::Approx(std::hypot(x, y)).epsilon(1e-10));
            TangentVector back = log_map(k, base, q);
            CHECK(std::abs(back.v.x - x) < 1e-10);
            CHECK(std::abs(back.v.y - y) < 1e-10);
        }
    }
}

TEST_CASE("angle_at basics") {
    Curvature flat{0.0};
    SurfacePoint o = euclidean_point(0, 0);
    CHECK(angle_at(flat, o, euclidean_point(1, 0), euclidean_point(0, 1)) ==
          doctest::Approx(kPi / 2));
    CHECK(angle_at(flat, o, euclidean_point(2, 3), euclidean_point(2, 3)) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(angle_at(flat, o, o, euclidean_point(1, 1)), DegenerateArc);
}

TEST_CASE("equilateral spherical octant triangle has right angles") {
    // Three mutually orthogonal unit vectors: the oracle configuration.
    Curvature k{1.0};
    SurfacePoint a = sphere_point(1, 0, 0), b = sphere_point(0, 1, 0),
                 c = sphere_point(0, 0, 1);
    CHECK(angle_at(k, a, b, c) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(loc_angle_from_sides(k, kPi / 2, kPi / 2, kPi / 2) ==
          doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("law of cosines: angles from sides") {
    Curvature flat{0.0};
    CHECK(loc_angle_from_sides(flat, 3, 4, 5) == doctest::Approx(kPi / 2));
    CHECK(loc_angle_from_sides(flat, 1, 1, 1) == doctest::Approx(kPi / 3));
    CHECK_THROWS_AS(loc_angle_from_sides(flat, 1, 1, 3),
                    TriangleInequalityViolated);
    CHECK_THROWS_AS(loc_angle_from_sides(Curvature{1.0}, 2.5, 2.5, 2.0),
                    PerimeterTooLarge);
}

TEST_CASE("law of cosines: side from sides and angle") {
    Curvature flat{0.0};
    CHECK(loc_side_from_sides_angle(flat, 3, 4, kPi / 2) == doctest::Approx(5.0));
    // gamma -> 0 degenerates to |a - b|
    CHECK(loc_side_from_sides_angle(flat, 3, 1, 1e-9) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS_AS(loc_side_from_sides_angle(Curvature{1.0}, 3.3, 1.0, 1.0),
                    StepTooLong);
}

TEST_CASE("hyperbolic right triangle against the hyperboloid oracle") {
    // Build the triangle explicitly on the hyperboloid: legs of length 1
    // along orthogonal frame directions at the apex.
    Curvature k{-1.0};
    SurfacePoint o = model_origin(k);
    SurfacePoint p = exp_map(k, o, tv(o, 1, 0));
    SurfacePoint q = exp_map(k, o, tv(o, 0, 1));
    double hyp = distance(k, p, q);
    CHECK(hyp == doctest::Approx(std::acosh(std::cosh(1.0) * std::cosh(1.0)))
                     .epsilon(1e-12));
    // Frozen oracle value for arccosh(cosh(1)^2).
    CHECK(hyp == doctest::Approx(1.5133740065965).epsilon(1e-12));
    CHECK(loc_side_from_sides_angle(k, 1, 1, kPi / 2) ==
          doctest::Approx(hyp).epsilon(1e-12));
}

TEST_CASE("law-of-cosines round trip over gamma") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> side(0.2, 1.4);
    std::uniform_real_distribution<double> ang(0.01, kPi - 0.01);
    for (double kk : {-1.0, -0.3, 0.0, 0.4, 1.0}) {
        Curvature k{kk};
        for (int i = 0; i < 200; ++i) {
            double a = side(rng), b = side(rng), gamma = ang(rng);
            double c = loc_side_from_sides_angle(k, a, b, gamma);
            if (c < 1e-12) continue;
            CHECK(loc_angle_from_sides(k, a, b, c) ==
                  doctest::Approx(gamma).epsilon(1e-10));
        }
    }
}

TEST_CASE("angle is monotone nondecreasing in curvature") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> side(0.1, 1.0);
    int checked = 0;
    while (checked < 1000) {
        double a = side(rng), b = side(rng), c = side(rng);
        if (c > a + b - 1e-3 || c < std::abs(a - b) + 1e-3) continue;
        double prev = -1.0;
        for (double kk : {-1.0, 0.0, 1.0}) {
            double ang = loc_angle_from_sides(Curvature{kk}, a, b, c);
            CHECK(ang >= prev - 1e-12);
            prev = ang;
        }
        ++checked;
    }
}

TEST_CASE("curved laws converge to the Euclidean one as k -> 0") {
    // The deviation scales like k * area; at |k| = 1e-6 it is under 1e-6
    // for unit-scale sides (at 1e-4 it is not, so that magnitude is checked
    // for the linear trend instead).
    double e = loc_angle_from_sides(Curvature{0.0}, 1, 1, 1);
    for (double kk : {1e-6, 1e-8, 1e-10}) {
        CHECK(std::abs(loc_angle_from_sides(Curvature{kk}, 1, 1, 1) - e) < 1e-6);
        CHECK(std::abs(loc_angle_from_sides(Curvature{-kk}, 1, 1, 1) - e) < 1e-6);
    }
    double d4 = loc_angle_from_sides(Curvature{1e-4}, 1, 1, 1) - e;
    double d5 = loc_angle_from_sides(Curvature{1e-5}, 1, 1, 1) - e;
    CHECK(d4 / d5 == doctest::Approx(10.0).epsilon(0.05));
    // Equilateral deviation k*Area/3 at k = 1e-4.
    CHECK(d4 == doctest::Approx(1e-4 * std::sqrt(3.0) / 4.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("short arcs fall back to stable formulas") {
    for (double kk : {-1.0, 1.0}) {
        Curvature k{kk};
        double c = loc_side_from_sides_angle(k, 3e-9, 4e-9, kPi / 2);
        CHECK(c == doctest::Approx(5e-9).epsilon(1e-12));
        CHECK(loc_angle_from_sides(k, 3e-9, 4e-9, c) ==
              doctest::Approx(kPi / 2).epsilon(1e-10));
    }
}

TEST_CASE("point validation") {
    CHECK_THROWS_AS(sphere_point(1, 1, 1), InvalidScene);
    CHECK_THROWS_AS(hyperboloid_point(1, 1, 1), InvalidScene);
    CHECK_THROWS_AS(hyperboloid_point(-1, 0, 0), InvalidScene);
    CHECK_NOTHROW(hyperboloid_point(std::sqrt(2.0), 1, 0));
}
