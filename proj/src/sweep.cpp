#include "wftq/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wftq/forward.hpp"

namespace wftq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDeg = kPi / 180.0;

template <typename Fold>
void run_trials(int trials, bool parallel, const Fold& fold) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int i = 0; i < trials; ++i) fold(i);
    (void)parallel;
}

void fold_max(double& acc, double x) {
#ifdef _OPENMP
#pragma omp critical(wftq_sweep_fold)
#endif
    acc = std::max(acc, x);
}

void fold_count(int& acc, int x) {
#ifdef _OPENMP
#pragma omp critical(wftq_sweep_fold)
#endif
    acc += x;
}

PlasticitySweepSummary plasticity_sweep_impl(int trials, uint64_t seed,
                                             double c, bool parallel) {
    PlasticitySweepSummary sum;
    sum.trials = trials;
    run_trials(trials, parallel, [&](int i) {
        AngularConfig cfg = random_interior_config(Curvature{0.0},
                                                   mix_seed(seed, i));
        PlasticityLine lin = plasticity_line(cfg, c);
        PlasticityLine closed = plasticity_line_closed_form(cfg, c);
        SignReport sr = sign_report(lin);

        double disagree = 0.0;
        for (int j = 0; j < 3; ++j) {
            disagree = std::max(disagree, std::abs(lin.a[j] - closed.a[j]));
            disagree = std::max(disagree, std::abs(lin.b[j] - closed.b[j]));
        }
        double sum_a = lin.a[0] + lin.a[1] + lin.a[2];
        double sum_b = lin.b[0] + lin.b[1] + lin.b[2];

        double residual = 0.0;
        if (!lin.positivity.empty()) {
            AngularConfig probe = cfg;
            auto w = lin.at(lin.positivity.midpoint());
            std::copy(w.begin(), w.end(), probe.weight.begin());
            residual = stationarity_residual(probe).norm;
        }

        fold_count(sum.sign_failures, sr.principle_holds ? 0 : 1);
        fold_max(sum.max_sum_a_error, std::abs(sum_a + 1.0));
        fold_max(sum.max_sum_b_error, std::abs(sum_b - c));
        fold_max(sum.max_path_disagreement, disagree);
        fold_max(sum.max_balance_residual, residual);
    });
    return sum;
}

RoundTripSweepSummary roundtrip_sweep_impl(Curvature k, int trials,
                                           uint64_t seed, double tol,
                                           int max_iter, bool parallel) {
    // Keep curved scenes comfortably inside the k > 0 validity bounds.
    double len_min = 0.5, len_max = 2.0;
    if (k.spherical()) {
        len_min = 0.1 * k.radius();
        len_max = 0.6 * k.radius();
    }
    RoundTripSweepSummary sum;
    sum.trials = trials;
    run_trials(trials, parallel, [&](int i) {
        AngularConfig cfg = random_interior_config(k, mix_seed(seed, i), 5.0,
                                                   175.0, len_min, len_max);
        PlasticityLine lin = plasticity_line(cfg, 1.0);
        auto w = lin.at(lin.positivity.midpoint());
        std::copy(w.begin(), w.end(), cfg.weight.begin());

        int fail = 0;
        double err = 0.0, res = 0.0;
        try {
            FTResult ft = solve_forward(realize_vertices(cfg), tol, max_iter);
            err = distance(k, ft.point, cfg.basepoint);
            res = ft.residual;
            if (ft.status != SolveStatus::Interior) fail = 1;
        } catch (const Error&) {
            fail = 1;
        }
        fold_count(sum.failures, fail);
        fold_max(sum.max_position_error, err);
        fold_max(sum.max_residual, res);
    });
    return sum;
}

}  // namespace

uint64_t mix_seed(uint64_t seed, uint64_t index) {
    // splitmix64 on the combined words.
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

AngularConfig random_interior_config(Curvature k, uint64_t trial_seed,
                                     double gap_min_deg, double gap_max_deg,
                                     double len_min, double len_max) {
    std::mt19937_64 rng(trial_seed);
    std::uniform_real_distribution<double> gap(gap_min_deg * kDeg,
                                               gap_max_deg * kDeg);
    std::uniform_real_distribution<double> len(len_min, len_max);
    std::array<double, 4> g{};
    for (;;) {
        g[0] = gap(rng);
        g[1] = gap(rng);
        g[2] = gap(rng);
        g[3] = 2.0 * kPi - g[0] - g[1] - g[2];
        if (g[3] > gap_min_deg * kDeg && g[3] < gap_max_deg * kDeg) break;
    }
    std::array<double, 4> theta{0.0, g[0], g[0] + g[1], g[0] + g[1] + g[2]};
    std::array<double, 4> lengths{len(rng), len(rng), len(rng), len(rng)};
    return AngularConfig::make(k, theta, lengths, {1.0, 1.0, 1.0, 1.0});
}

PlasticitySweepSummary plasticity_sweep(int trials, uint64_t seed, double c) {
    return plasticity_sweep_impl(trials, seed, c, true);
}

PlasticitySweepSummary plasticity_sweep_serial(int trials, uint64_t seed,
                                               double c) {
    return plasticity_sweep_impl(trials, seed, c, false);
}

RoundTripSweepSummary roundtrip_sweep(Curvature k, int trials, uint64_t seed,
                                      double tol, int max_iter) {
    return roundtrip_sweep_impl(k, trials, seed, tol, max_iter, true);
}

RoundTripSweepSummary roundtrip_sweep_serial(Curvature k, int trials,
                                             uint64_t seed, double tol,
                                             int max_iter) {
    return roundtrip_sweep_impl(k, trials, seed, tol, max_iter, false);
}

std::vector<std::array<double, 4>> wd_sweep(const PlasticityLine& line,
                                            double lo, double hi, int count) {
    std::vector<std::array<double, 4>> rows;
    if (count < 1) return rows;
    rows.reserve(count);
    for (int i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        rows.push_back(line.at(lo + t * (hi - lo)));
    }
    return rows;
}

}  // namespace wftq
