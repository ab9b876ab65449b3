#pragma once

#include <cstdint>
#include <vector>

#include "wftq/config.hpp"
#include "wftq/inverse.hpp"

namespace wftq {

/// Deterministic per-trial generator: trial i of a sweep draws from an RNG
/// seeded by mix(seed, i), so parallel and serial schedules produce
/// identical results.
uint64_t mix_seed(uint64_t seed, uint64_t index);

/// Random interior configuration: consecutive gaps drawn uniformly from
/// (gap_min, gap_max) degrees by rejection until they close up to 2*pi,
/// lengths uniform in (len_min, len_max), unit weights (callers overwrite).
AngularConfig random_interior_config(Curvature k, uint64_t trial_seed,
                                     double gap_min_deg = 5.0,
                                     double gap_max_deg = 175.0,
                                     double len_min = 0.5,
                                     double len_max = 2.0);

struct PlasticitySweepSummary {
    int trials = 0;
    int sign_failures = 0;
    double max_sum_a_error = 0.0;      // |a_A + a_B + a_C + 1|
    double max_sum_b_error = 0.0;      // |b_A + b_B + b_C - c|
    double max_path_disagreement = 0.0;  // closed form vs linear solve
    double max_balance_residual = 0.0;   // stationarity at mid-interval weights
};

/// Evaluates the plasticity line (both computation paths) on `trials` random
/// interior configurations and folds the worst deviations. OpenMP-parallel
/// kernel; the _serial variant is the reference implementation kept for
/// testing and benchmarking.
PlasticitySweepSummary plasticity_sweep(int trials, uint64_t seed, double c);
PlasticitySweepSummary plasticity_sweep_serial(int trials, uint64_t seed,
                                               double c);

struct RoundTripSweepSummary {
    int trials = 0;
    int failures = 0;  // solver did not converge
    double max_position_error = 0.0;
    double max_residual = 0.0;
};

/// Inverse -> realize -> forward round trips: weights from balance_weights at
/// the midpoint of the positivity interval, vertices realized at the trial's
/// lengths, solve_forward must recover the basepoint.
RoundTripSweepSummary roundtrip_sweep(Curvature k, int trials, uint64_t seed,
                                      double tol = 1e-10, int max_iter = 10000);
RoundTripSweepSummary roundtrip_sweep_serial(Curvature k, int trials,
                                             uint64_t seed, double tol = 1e-10,
                                             int max_iter = 10000);

/// Evenly spaced w_D values (inclusive endpoints) mapped through the line.
std::vector<std::array<double, 4>> wd_sweep(const PlasticityLine& line,
                                            double lo, double hi, int count);

}  // namespace wftq
