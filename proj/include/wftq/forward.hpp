#pragma once

#include <array>

#include "wftq/config.hpp"

namespace wftq {

enum class SolveStatus { Interior, AbsorbedAtVertex };

/// Solution of the forward problem. For Interior solutions `directions` is
/// the normalized angular view from the solved point (theta[A] = 0); when a
/// vertex absorbs the minimum its own direction slot is NaN and the residual
/// is the absorption slack max(0, |pull| - w_R).
struct FTResult {
    SurfacePoint point;
    double objective = 0.0;
    std::array<double, 4> arc_length{};
    std::array<double, 4> direction{};
    double residual = 0.0;
    SolveStatus status = SolveStatus::Interior;
    int absorbed_vertex = -1;
    int iterations = 0;
};

/// Weiszfeld iteration did not reach the tolerance; carries the best iterate.
struct NoConvergence : Error {
    NoConvergence(const std::string& msg, FTResult best)
        : Error(msg), best(std::move(best)) {}
    FTResult best;
};

/// Finds the point minimizing sum(w_R * distance(P, R)) by the Riemannian
/// Weiszfeld iteration with step halving; convergence is declared on the
/// gradient norm |sum w_R u_R| <= tol. Throws NoConvergence past max_iter.
FTResult solve_forward(const VertexConfig& vc, double tol = 1e-10,
                       int max_iter = 10000);

/// The four sums over Q of w_Q cos(angle Q-P_F-R), plus the norm of the
/// weighted direction sum; the sums are exactly the projections of that
/// vector onto the four directions.
struct StationarityResidual {
    std::array<double, 4> cosine_sum{};
    double norm = 0.0;
};

StationarityResidual stationarity_residual(const AngularConfig& cfg);

/// True iff the minimum is absorbed at vertex v:
/// |sum_{Q != v} w_Q u_Q(v)| <= w_v (closed condition).
bool vertex_absorption_test(const VertexConfig& vc, VertexId v);

}  // namespace wftq
