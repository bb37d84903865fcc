#include "amgm/refined_bounds.hpp"

#include "amgm/errors.hpp"
#include "amgm/means.hpp"

namespace amgm {

double refined_amgm_upper(const WeightedSample& ws) {
  return arithmetic_mean(ws) - sqrt_variance(ws);
}

std::pair<double, double> cartwright_field_bounds(const WeightedSample& ws) {
  const double m = ws.min_value();
  if (!(m > 0.0)) {
    throw DomainError("Cartwright-Field upper bound undefined for zero values");
  }
  const double var = variance(ws);
  return {var / (2.0 * ws.max_value()), var / (2.0 * m)};
}

BoundReport verify_chain(const WeightedSample& ws, const Tolerance& tol) {
  tol.validate();

  BoundReport r;
  r.tolerance_used = tol;
  r.am = arithmetic_mean(ws);
  r.gm = geometric_mean(ws);
  r.power_mean_half = power_mean(ws, 0.5);
  r.sqrt_var = sqrt_variance(ws);
  r.refined_upper = r.am - r.sqrt_var;
  r.gap = amgm_gap(ws);
  if (ws.min_value() > 0.0) {
    const auto [lo, hi] = cartwright_field_bounds(ws);
    r.cf_lower = lo;
    r.cf_upper = hi;
  }

  const double slack = tol.allowance(r.am);
  bool ok = r.gap >= -slack;
  ok = ok && r.gm <= r.refined_upper + slack;
  ok = ok && r.refined_upper <= r.am + slack;
  if (r.cf_lower && r.cf_upper) {
    ok = ok && *r.cf_lower <= r.gap + slack;
    ok = ok && r.gap <= *r.cf_upper + slack;
  }
  r.chain_ok = ok;
  return r;
}

}  // namespace amgm
