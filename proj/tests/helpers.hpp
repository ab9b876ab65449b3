#pragma once

#include <array>
#include <cmath>
#include <random>

#include "wftq/config.hpp"
#include "wftq/kplane.hpp"

namespace wftq::test {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDeg = kPi / 180.0;

// Independent 3x3 solve by Cramer's rule; the oracle counterpart of the
// elimination path in the library.
inline std::array<double, 3> cramer3(const std::array<std::array<double, 3>, 3>& m,
                                     const std::array<double, 3>& r) {
    auto det3 = [](const std::array<std::array<double, 3>, 3>& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    double d = det3(m);
    std::array<double, 3> x{};
    for (int col = 0; col < 3; ++col) {
        auto mc = m;
        for (int row = 0; row < 3; ++row) mc[row][col] = r[row];
        x[col] = det3(mc) / d;
    }
    return x;
}

// Balance-weight oracle: solve the sine/budget system directly.
inline std::array<double, 4> balance_oracle(const std::array<double, 4>& theta,
                                            double c, double wd) {
    std::array<std::array<double, 3>, 3> m{};
    for (int i = 0; i < 3; ++i) {
        m[0][i] = std::cos(theta[i]);
        m[1][i] = std::sin(theta[i]);
        m[2][i] = 1.0;
    }
    std::array<double, 3> rhs{-wd * std::cos(theta[3]),
                              -wd * std::sin(theta[3]), c - wd};
    auto w = cramer3(m, rhs);
    return {w[0], w[1], w[2], wd};
}

// Random interior gap pattern by rejection.
inline std::array<double, 4> random_interior_thetas(std::mt19937_64& rng,
                                                    double lo_deg = 5.0,
                                                    double hi_deg = 175.0) {
    std::uniform_real_distribution<double> gap(lo_deg * kDeg, hi_deg * kDeg);
    for (;;) {
        double g0 = gap(rng), g1 = gap(rng), g2 = gap(rng);
        double g3 = 2.0 * kPi - g0 - g1 - g2;
        if (g3 > lo_deg * kDeg && g3 < hi_deg * kDeg)
            return {0.0, g0, g0 + g1, g0 + g1 + g2};
    }
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace wftq::test
