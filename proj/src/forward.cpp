#include "wftq/forward.hpp"

#include <cmath>
#include <limits>

namespace wftq {

namespace {

constexpr double kVertexGuard = 1e-9;

double objective_at(const VertexConfig& vc, const SurfacePoint& p) {
    double f = 0.0;
    for (int i = 0; i < 4; ++i)
        f += vc.weight[i] * distance(vc.k, p, vc.vertex[i]);
    return f;
}

// Weighted one-step Karcher average: exp/log barycenter seeded at vertex A.
// Reduces to the weighted vertex average in the flat case.
SurfacePoint initial_point(const VertexConfig& vc) {
    const SurfacePoint& seed = vc.vertex[0];
    double wsum = 0.0;
    Vec2 acc{};
    for (int i = 0; i < 4; ++i) {
        wsum += vc.weight[i];
        if (i == 0) continue;
        TangentVector tv = log_map(vc.k, seed, vc.vertex[i]);
        acc = acc + vc.weight[i] * tv.v;
    }
    return exp_map(vc.k, seed, TangentVector{seed, (1.0 / wsum) * acc});
}

FTResult absorbed_result(const VertexConfig& vc, int v, double slack) {
    FTResult res;
    res.status = SolveStatus::AbsorbedAtVertex;
    res.absorbed_vertex = v;
    res.point = vc.vertex[v];
    res.residual = slack;
    for (int i = 0; i < 4; ++i) {
        if (i == v) {
            res.arc_length[i] = 0.0;
            res.direction[i] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        TangentVector tv = log_map(vc.k, res.point, vc.vertex[i]);
        res.arc_length[i] = norm(tv);
        res.direction[i] = std::atan2(tv.v.y, tv.v.x);
        res.objective += vc.weight[i] * res.arc_length[i];
    }
    return res;
}

double absorption_slack(const VertexConfig& vc, int v) {
    Vec2 pull{};
    for (int i = 0; i < 4; ++i) {
        if (i == v) continue;
        TangentVector tv = log_map(vc.k, vc.vertex[v], vc.vertex[i]);
        double l = norm(tv);
        if (l == 0.0) throw DegenerateArc("coincident vertices");
        pull = pull + (vc.weight[i] / l) * tv.v;
    }
    return norm(pull) - vc.weight[v];
}

}  // namespace

bool vertex_absorption_test(const VertexConfig& vc, VertexId v) {
    return absorption_slack(vc, static_cast<int>(v)) <= 0.0;
}

StationarityResidual stationarity_residual(const AngularConfig& cfg) {
    Vec2 sum{};
    for (int i = 0; i < 4; ++i)
        sum = sum + cfg.weight[i] * polar(1.0, cfg.theta[i]);
    StationarityResidual r;
    r.norm = norm(sum);
    for (int i = 0; i < 4; ++i)
        r.cosine_sum[i] = dot(sum, polar(1.0, cfg.theta[i]));
    return r;
}

FTResult solve_forward(const VertexConfig& vc, double tol, int max_iter) {
    if (!(tol > 0.0) || max_iter < 1) throw InvalidScene("invalid solver settings");
    for (int v = 0; v < 4; ++v) {
        double slack = absorption_slack(vc, v);
        if (slack <= 0.0) return absorbed_result(vc, v, std::max(0.0, slack));
    }

    SurfacePoint p = initial_point(vc);
    double f = objective_at(vc, p);
    FTResult best;
    best.residual = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < max_iter; ++iter) {
        std::array<TangentVector, 4> logs;
        std::array<double, 4> lens{};
        int near_vertex = -1;
        for (int i = 0; i < 4; ++i) {
            logs[i] = log_map(vc.k, p, vc.vertex[i]);
            lens[i] = norm(logs[i]);
            if (lens[i] < kVertexGuard) near_vertex = i;
        }
        if (near_vertex >= 0) {
            double slack = absorption_slack(vc, near_vertex);
            if (slack <= 0.0)
                return absorbed_result(vc, near_vertex, std::max(0.0, slack));
            // Not a minimizer: step off the vertex along the net pull.
            Vec2 pull{};
            double lmin = std::numeric_limits<double>::infinity();
            for (int i = 0; i < 4; ++i) {
                if (i == near_vertex) continue;
                pull = pull + (vc.weight[i] / lens[i]) * logs[i].v;
                lmin = std::min(lmin, lens[i]);
            }
            double step = 1e-3 * lmin / norm(pull);
            p = exp_map(vc.k, p, TangentVector{p, step * pull});
            f = objective_at(vc, p);
            continue;
        }

        Vec2 grad{};  // sum of w_R * u_R; the stationarity residual vector
        double inv_scale = 0.0;
        for (int i = 0; i < 4; ++i) {
            grad = grad + (vc.weight[i] / lens[i]) * logs[i].v;
            inv_scale += vc.weight[i] / lens[i];
        }
        double res = norm(grad);
        if (res < best.residual) {
            best.residual = res;
            best.point = p;
            best.objective = f;
            best.iterations = iter;
        }
        if (res <= tol) {
            FTResult out;
            out.status = SolveStatus::Interior;
            out.point = p;
            out.residual = res;
            out.iterations = iter;
            AngularConfig view = extract_angular(vc, p);
            for (int i = 0; i < 4; ++i) {
                out.arc_length[i] = view.length[i];
                out.direction[i] = view.theta[i];
                out.objective += vc.weight[i] * view.length[i];
            }
            return out;
        }

        double tau = 1.0 / inv_scale;
        // Step halving keeps the objective non-increasing; the slack term
        // absorbs rounding noise at the bottom of the basin.
        bool accepted = false;
        for (int h = 0; h < 60; ++h) {
            SurfacePoint cand =
                exp_map(vc.k, p, TangentVector{p, tau * grad});
            double fc = objective_at(vc, cand);
            if (fc <= f + 16.0 * std::numeric_limits<double>::epsilon() *
                              (std::abs(f) + 1.0)) {
                p = cand;
                f = std::min(f, fc);
                accepted = true;
                break;
            }
            tau *= 0.5;
        }
        if (!accepted) break;
    }
    best.status = SolveStatus::Interior;
    throw NoConvergence("gradient norm did not reach tolerance", best);
}

}  // namespace wftq
