#pragma once

#include <array>

#include "wftq/config.hpp"

namespace wftq {

/// Tangent-plane image of the weighted quadrilateral: R' sits at polar
/// coordinates (w_R, theta_R), so |P_F R'| = w_R exactly.
struct TangentImage {
    std::array<Vec2, 4> point{};
};

enum class ParClass { A, B, Direct };
enum class ClassChoice { A, B, Auto };

constexpr const char* par_class_name(ParClass c) {
    constexpr const char* names[3] = {"A", "B", "Direct"};
    return names[static_cast<int>(c)];
}

/// Reflected figure and its parallelogram diagnostics. `corners` is the
/// candidate parallelogram in cyclic order (Class A: A'*, B', C'*, D';
/// Class B: A', B'*, C', D'*; Direct: A', B', C', D'). The midpoint gap
/// equals half the stationarity residual norm, so exactly balanced weights
/// make it vanish.
struct ParallelogramReport {
    ParClass cls = ParClass::A;
    std::array<Vec2, 4> corners{};
    std::array<double, 4> side_length{};
    double diagonal_midpoint_gap = 0.0;
    double opposite_side_mismatch = 0.0;
    bool is_parallelogram = false;
};

TangentImage tangent_image(const AngularConfig& cfg);

/// Reflects one diagonal pair of the tangent image through the basepoint.
/// Auto mode applies the strict weight orderings
/// (w_B>w_A>w_D>w_C -> Class A, w_A>w_B>w_C>w_D -> Class B) and throws
/// NoClassApplicable when neither holds and the weights are not in the
/// direct pattern. `tol` bounds the side mismatch and midpoint gap accepted
/// as a parallelogram; non-positive tol means 1e-9 * max weight.
ParallelogramReport symmetrize(const AngularConfig& cfg, ClassChoice choice,
                               double tol = 0.0);

/// Direct case: w_A = w_C and w_B = w_D (within 1e-10) on a both-diagonals
/// configuration maps to a parallelogram without reflection. Throws
/// PatternMismatch otherwise.
ParallelogramReport direct_parallelogram_check(const AngularConfig& cfg,
                                               double tol = 0.0);

}  // namespace wftq
