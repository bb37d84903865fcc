#pragma once

#include "amgm/weighted_sample.hpp"

namespace amgm {

// Weighted means and dispersion of a WeightedSample. All sums are
// compensated; all functions are pure and thread-safe.

/// sum_i alpha_i x_i
[[nodiscard]] double arithmetic_mean(const WeightedSample& ws);

/// prod_i x_i^alpha_i, evaluated as exp(sum_i alpha_i log x_i). Exactly 0 when
/// any value is 0.
[[nodiscard]] double geometric_mean(const WeightedSample& ws);

/// (sum_i alpha_i x_i^s)^(1/s) for finite s > 0; ParameterError otherwise.
[[nodiscard]] double power_mean(const WeightedSample& ws, double s);

/// Variance of the square roots, sum_i alpha_i (sqrt(x_i) - E[sqrt x])^2,
/// in two-pass centered form. Exactly 0 for a constant sample.
[[nodiscard]] double sqrt_variance(const WeightedSample& ws);

/// sum_i alpha_i (x_i - E[x])^2, two-pass centered. Exactly 0 for a constant
/// sample.
[[nodiscard]] double variance(const WeightedSample& ws);

/*!
  The AM-GM gap, arithmetic_mean - geometric_mean, evaluated without the
  cancellation of the direct difference.

  With A = arithmetic_mean and d_i = x_i / A - 1, the weights summing to one
  give sum_i alpha_i d_i = 0, so

      log(GM / A) = sum_i alpha_i (log1p(d_i) - d_i) =: H

  and the gap is -A * expm1(H). Each log1p(d) - d is evaluated by series for
  small |d|, so the result keeps full relative accuracy when the values are
  nearly equal and the gap is many orders of magnitude below the mean. The
  form is exactly 1-homogeneous in the values. A sample containing a zero has
  gap A; a constant sample has gap 0.
*/
[[nodiscard]] double amgm_gap(const WeightedSample& ws);

}  // namespace amgm
