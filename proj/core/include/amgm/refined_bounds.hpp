#pragma once

#include <optional>
#include <utility>

#include "amgm/tolerance.hpp"
#include "amgm/weighted_sample.hpp"

namespace amgm {

/// Every quantity of the refined AM-GM chain for one sample.
struct BoundReport {
  double am = 0.0;
  double gm = 0.0;
  double power_mean_half = 0.0;
  double sqrt_var = 0.0;
  double refined_upper = 0.0;  ///< am - sqrt_var
  std::optional<double> cf_lower;  ///< Var(x) / (2 max x), present iff min x > 0
  std::optional<double> cf_upper;  ///< Var(x) / (2 min x), present iff min x > 0
  double gap = 0.0;                ///< am - gm, see amgm_gap()
  bool chain_ok = false;
  Tolerance tolerance_used;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Upper bound on the geometric mean tightened by the variance of the square
/// roots: arithmetic_mean(ws) - sqrt_variance(ws). Algebraically this equals
/// power_mean(ws, 1/2), but it is deliberately evaluated through the variance
/// so that the identity stays an independent check.
[[nodiscard]] double refined_amgm_upper(const WeightedSample& ws);

/// Cartwright-Field sandwich (Var(x)/(2M), Var(x)/(2m)) for the AM-GM gap,
/// with m and M the smallest and largest value. Throws DomainError when m = 0.
[[nodiscard]] std::pair<double, double> cartwright_field_bounds(const WeightedSample& ws);

/*!
  Evaluates the full chain

      gm <= refined_upper <= am,   cf_lower <= am - gm <= cf_upper

  and reports whether it holds within `tol`, where the slack is
  tol.allowance(am). The Cartwright-Field fields are left empty rather than
  raising when the sample contains a zero.
*/
[[nodiscard]] BoundReport verify_chain(const WeightedSample& ws,
                                       const Tolerance& tol = kChainTolerance);

}  // namespace amgm
