#pragma once

#include <array>

#include "wftq/config.hpp"

namespace wftq {

/// Open interval (lo, hi); empty when hi <= lo.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return !(hi > lo); }
    bool contains(double x) const { return x > lo && x < hi; }
    double midpoint() const { return 0.5 * (lo + hi); }
};

/// One-parameter family of admissible weights w_i = a_i * w_D + b_i for
/// i in {A, B, C}, with the weight budget and the w_D interval on which all
/// four weights stay positive. Coefficients satisfy sum(a) = -1 and
/// sum(b) = budget; interior configurations give a_A < 0, a_C < 0, a_B > 0.
struct PlasticityLine {
    std::array<double, 3> a{};  // indexed A, B, C
    std::array<double, 3> b{};
    double budget = 0.0;
    Interval positivity;

    std::array<double, 4> at(double w_d) const {
        return {a[0] * w_d + b[0], a[1] * w_d + b[1], a[2] * w_d + b[2], w_d};
    }
};

/// Affine family for the degenerate case with the basepoint on diagonal BD:
/// w_C = x_c * w_D + y_c, w_B = x_b * w_D + y_b, and w_A = a_from_c * w_C.
/// Valid configurations have x_c < 0, x_b > 0, det < 0. `mirrored` is true
/// when the basepoint lies closer to D than to B along the diagonal (the
/// reflected orientation of the same construction).
struct DiagonalLine {
    double x_c = 0.0, y_c = 0.0;
    double x_b = 0.0, y_b = 0.0;
    double a_from_c = 0.0;
    double det = 0.0;
    double budget = 0.0;
    bool mirrored = false;
    Interval positivity;

    std::array<double, 4> at(double w_d) const {
        double wc = x_c * w_d + y_c;
        return {a_from_c * wc, x_b * w_d + y_b, wc, w_d};
    }
};

struct SignReport {
    bool principle_holds = false;
    std::array<double, 3> a{};
};

/// Weights (w_A, w_B, w_C, w_D) balancing the four unit directions under the
/// budget sum(w) = c for the given w_D. Components may be non-positive; use
/// the positivity interval to restrict. Throws SingularSystem when the A, B,
/// C directions degenerate (two coincide).
std::array<double, 4> balance_weights(const AngularConfig& cfg, double c,
                                      double w_d);

/// Plasticity line by a two-point linear solve through balance_weights.
PlasticityLine plasticity_line(const AngularConfig& cfg, double c);

/// Same line assembled from the closed-form triangle ratios; the sine
/// denominators vanish exactly in the diagonal cases (SingularSystem).
PlasticityLine plasticity_line_closed_form(const AngularConfig& cfg, double c);

/// 3-point inverse problem: the positive ratios (w_B/w_A, w_C/w_A) balancing
/// three unit directions. Requires the basepoint interior to the triangle
/// (all consecutive gaps below pi). Throws DegenerateTriangle.
std::pair<double, double> triangle_inverse_ratios(double theta_a,
                                                  double theta_b,
                                                  double theta_c);

/// Exchange-rule signs: a_A < 0, a_C < 0, a_B > 0.
SignReport sign_report(const PlasticityLine& line);

/// Degenerate-case family for a configuration with the basepoint on
/// diagonal BD (OnDiagonalBD or OnBothDiagonals). Throws NotOnDiagonal.
DiagonalLine diagonal_case(const AngularConfig& cfg, double c);

/// {w_D > 0 : a_i * w_D + b_i > 0 for all i} as an open interval.
Interval positivity_interval(const PlasticityLine& line);

}  // namespace wftq
