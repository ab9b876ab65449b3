#include "wftq/inverse.hpp"

#include <cmath>
#include <limits>

namespace wftq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSingularTol = 1e-12;

// sin of the signed angle from vertex i to vertex j as seen from the
// basepoint; the orientation convention behind every sine system here.
double sin_ij(const AngularConfig& cfg, int i, int j) {
    return std::sin(cfg.theta[j] - cfg.theta[i]);
}

Interval positivity_from(const std::array<double, 3>& a,
                         const std::array<double, 3>& b) {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        if (a[i] > 0.0) {
            lo = std::max(lo, -b[i] / a[i]);
        } else if (a[i] < 0.0) {
            hi = std::min(hi, b[i] / -a[i]);
        } else if (b[i] <= 0.0) {
            return {0.0, 0.0};
        }
    }
    if (!(hi > lo)) return {0.0, 0.0};
    return {lo, hi};
}

// 3x3 solve by Gaussian elimination with partial pivoting. The singularity
// test scales each row to unit norm first, so it measures the geometry, not
// the magnitudes.
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> m,
                             std::array<double, 3> rhs) {
    {
        auto ms = m;
        for (auto& row : ms) {
            double n = std::sqrt(row[0] * row[0] + row[1] * row[1] +
                                 row[2] * row[2]);
            if (n > 0.0)
                for (double& x : row) x /= n;
        }
        double det =
            ms[0][0] * (ms[1][1] * ms[2][2] - ms[1][2] * ms[2][1]) -
            ms[0][1] * (ms[1][0] * ms[2][2] - ms[1][2] * ms[2][0]) +
            ms[0][2] * (ms[1][0] * ms[2][1] - ms[1][1] * ms[2][0]);
        if (std::abs(det) < kSingularTol)
            throw SingularSystem("balance directions are rank deficient");
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < 3; ++r) {
            double f = m[r][col] / m[col][col];
            for (int c2 = col; c2 < 3; ++c2) m[r][c2] -= f * m[col][c2];
            rhs[r] -= f * rhs[col];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double s = rhs[r];
        for (int c2 = r + 1; c2 < 3; ++c2) s -= m[r][c2] * x[c2];
        x[r] = s / m[r][r];
    }
    return x;
}

}  // namespace

std::array<double, 4> balance_weights(const AngularConfig& cfg, double c,
                                      double w_d) {
    std::array<std::array<double, 3>, 3> m{};
    for (int i = 0; i < 3; ++i) {
        m[0][i] = std::cos(cfg.theta[i]);
        m[1][i] = std::sin(cfg.theta[i]);
        m[2][i] = 1.0;
    }
    std::array<double, 3> rhs{-w_d * std::cos(cfg.theta[3]),
                              -w_d * std::sin(cfg.theta[3]), c - w_d};
    auto w = solve3(m, rhs);
    return {w[0], w[1], w[2], w_d};
}

PlasticityLine plasticity_line(const AngularConfig& cfg, double c) {
    auto w0 = balance_weights(cfg, c, 0.0);
    auto w1 = balance_weights(cfg, c, 1.0);
    PlasticityLine line;
    line.budget = c;
    for (int i = 0; i < 3; ++i) {
        line.a[i] = w1[i] - w0[i];
        line.b[i] = w0[i];
    }
    line.positivity = positivity_from(line.a, line.b);
    return line;
}

PlasticityLine plasticity_line_closed_form(const AngularConfig& cfg,
                                           double c) {
    const int A = 0, B = 1, C = 2, D = 3;
    double s_cb = sin_ij(cfg, C, B), s_bc = sin_ij(cfg, B, C);
    if (std::abs(s_cb) < kSingularTol || std::abs(s_bc) < kSingularTol)
        throw SingularSystem("sine denominator vanishes");
    // Triangle-subproblem ratios. The products (w_A/w_D)_ACD * (w_B/w_A)_ABC
    // and (w_A/w_D)_ABD * (w_C/w_A)_ABC are grouped so the shared sine
    // cancels, which keeps the assembly finite on the diagonal
    // configurations.
    double r_ba = -sin_ij(cfg, C, A) / s_cb;  // (w_B/w_A) in ABC
    double r_ca = -sin_ij(cfg, B, A) / s_bc;  // (w_C/w_A) in ABC
    double p_acd = sin_ij(cfg, C, D) / s_cb;  // (w_A/w_D)_ACD * r_ba
    double p_abd = sin_ij(cfg, B, D) / s_bc;  // (w_A/w_D)_ABD * r_ca
    double denom = 1.0 + r_ba + r_ca;
    if (std::abs(denom) < kSingularTol)
        throw SingularSystem("triangle ratios sum to zero");
    PlasticityLine line;
    line.budget = c;
    double a_a = (p_acd + p_abd - 1.0) / denom;
    double b_a = c / denom;  // (w_A) of the triangle ABC subproblem
    line.a = {a_a, a_a * r_ba - p_acd, a_a * r_ca - p_abd};
    line.b = {b_a, r_ba * b_a, r_ca * b_a};
    line.positivity = positivity_from(line.a, line.b);
    return line;
}

std::pair<double, double> triangle_inverse_ratios(double theta_a,
                                                  double theta_b,
                                                  double theta_c) {
    auto wrap = [](double a) {
        a = std::fmod(a, 2.0 * kPi);
        return a < 0.0 ? a + 2.0 * kPi : a;
    };
    // Interior basepoint: all three consecutive gaps in (0, pi).
    double g1 = wrap(theta_b - theta_a);
    double g2 = wrap(theta_c - theta_b);
    double g3 = 2.0 * kPi - g1 - g2;
    for (double g : {g1, g2, g3})
        if (!(g > 1e-9 && g < kPi - 1e-9))
            throw DegenerateTriangle("basepoint not interior to the triangle");
    double r_ba = -std::sin(theta_a - theta_c) / std::sin(theta_b - theta_c);
    double r_ca = -std::sin(theta_a - theta_b) / std::sin(theta_c - theta_b);
    return {r_ba, r_ca};
}

SignReport sign_report(const PlasticityLine& line) {
    SignReport rep;
    rep.a = line.a;
    rep.principle_holds = line.a[0] < 0.0 && line.a[2] < 0.0 && line.a[1] > 0.0;
    return rep;
}

DiagonalLine diagonal_case(const AngularConfig& cfg, double c) {
    Position pos = convexity_check(cfg);
    if (pos != Position::OnDiagonalBD && pos != Position::OnBothDiagonals)
        throw NotOnDiagonal("basepoint is not on diagonal BD");
    const int A = 0, B = 1, C = 2, D = 3;
    double s_bc = sin_ij(cfg, B, C), s_ba = sin_ij(cfg, B, A);
    double s_cb = sin_ij(cfg, C, B), s_ca = sin_ij(cfg, C, A);
    double s_cd = sin_ij(cfg, C, D);
    double s = s_bc / s_ba;
    DiagonalLine line;
    line.budget = c;
    // The reference orientation has the basepoint closer to B along the
    // diagonal; the mirrored orientation solves the same system with C on
    // the other side.
    line.mirrored = cfg.theta[C] < kPi;
    line.det = (1.0 - s) * s_cb + s_ca * s;
    if (std::abs(line.det) < kSingularTol)
        throw SingularSystem("degenerate diagonal system");
    // Cramer on rows {(1-s) w_C + w_B = c - w_D,
    //                 -s_ca*s w_C + s_cb w_B = -s_cd w_D}.
    line.x_c = (-s_cb + s_cd) / line.det;
    line.y_c = c * s_cb / line.det;
    line.x_b = (-(1.0 - s) * s_cd - s_ca * s) / line.det;
    line.y_b = c * s_ca * s / line.det;
    line.a_from_c = -s_bc / s_ba;
    // Positivity of (w_A, w_B, w_C): w_A = a_from_c * w_C shares w_C's sign
    // constraint scaled by a positive factor.
    std::array<double, 3> a{line.a_from_c * line.x_c, line.x_b, line.x_c};
    std::array<double, 3> b{line.a_from_c * line.y_c, line.y_b, line.y_c};
    line.positivity = positivity_from(a, b);
    return line;
}

Interval positivity_interval(const PlasticityLine& line) {
    return positivity_from(line.a, line.b);
}

}  // namespace wftq
