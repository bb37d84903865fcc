#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "amgm/weighted_sample.hpp"

namespace amgm {

/// (arithmetic_mean - geometric_mean) / sqrt_variance. Never below 1 for a
/// valid sample. DomainError when the sample is constant.
[[nodiscard]] double gap_variance_ratio(const WeightedSample& ws);

/// A closed-form sample whose gap/variance ratio is known exactly.
struct CanonicalExample {
  std::string family;
  WeightedSample sample;
  double predicted_ratio;
};

/*!
  The two extremal families showing that the AM-GM gap is not controlled by
  the variance of the square roots alone:

    A: equal weights 1/n on (0, 1, ..., 1), ratio n
    B: weights (alpha, 1 - alpha) on (0, 1), ratio 1/alpha

  ParameterError unless n >= 2 and 0 < alpha < 1/2.
*/
[[nodiscard]] std::vector<CanonicalExample> canonical_counterexamples(std::size_t n,
                                                                      double alpha);

/// Best canonical sample admitted by a weight floor: weight delta on a single
/// zero, the rest spread evenly over ones. Ratio 1/delta; reduces to family A
/// at delta = 1/n and to family B at n = 2.
[[nodiscard]] CanonicalExample floor_family(std::size_t n, double delta);

struct SearchConfig {
  std::size_t n = 2;
  double delta = 0.1;  ///< minimum weight, in (0, 1/n]
  std::size_t restarts = 8;
  std::size_t iterations = 2000;
  std::uint64_t seed = 0;
  double step_scale = 1.0;  ///< initial pattern step in parameter space
  std::size_t threads = 1;  ///< restarts are distributed over this many workers

  /// Throws ParameterError on any out-of-range field.
  void validate() const;
};

struct SearchResult {
  double best_ratio;
  WeightedSample best_sample;
  std::vector<double> restart_ratios;  ///< -inf for a restart stuck at zero variance
  std::size_t evaluations = 0;
  std::vector<std::vector<double>> traces;  ///< best ratio after each iteration, per restart
};

/// Called with every candidate sample the search evaluates. With more than one
/// thread it is invoked concurrently and must synchronize itself.
using SampleObserver = std::function<void(const WeightedSample&)>;

/*!
  Derivative-free maximization of gap_variance_ratio over

    { weights with min alpha_i >= delta } x { values in [0, 1]^n, max = 1 }.

  Weights are alpha = delta + (1 - n delta) softmax(w) and values are
  x_i = exp(z_i - max z), flushed to exactly 0 far below the maximum, so every
  iterate is feasible without projection. Each restart is a compass search
  over (w, z) that halves its step after a failed sweep. Restart 0 starts at
  floor_family(n, delta); restart r > 0 draws its start from a generator
  seeded with seed + r. The result is bit-identical for any thread count.
*/
[[nodiscard]] SearchResult maximize_ratio(const SearchConfig& config,
                                          const SampleObserver& observer = {});

struct RatioRow {
  double delta;
  double best_ratio;
};

/// maximize_ratio at each delta with the other settings from per_point_config
/// (its n and delta are overridden).
[[nodiscard]] std::vector<RatioRow> ratio_vs_delta_table(std::size_t n,
                                                         const std::vector<double>& deltas,
                                                         const SearchConfig& per_point_config);

}  // namespace amgm
