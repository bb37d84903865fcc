#include "amgm/means.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "amgm/compensated_sum.hpp"
#include "amgm/errors.hpp"

namespace amgm {
namespace {

// log1p(d) - d. Below |d| = 1/8 the alternating series
//   -d^2/2 + d^3/3 - d^4/4 + ...
// is summed directly (24 terms reach below 1e-22 relative); above that the
// cancellation in the closed form costs at most ~20 ulp.
double log1p_minus_identity(double d) {
  if (std::abs(d) >= 0.125) return std::log1p(d) - d;
  constexpr int kTerms = 24;
  double acc = 0.0;
  for (int k = kTerms + 1; k >= 2; --k) {
    const double coeff = (k % 2 == 0 ? -1.0 : 1.0) / static_cast<double>(k);
    acc = acc * d + coeff;
  }
  return acc * d * d;
}

double sqrt_mean(const WeightedSample& ws) {
  CompensatedSum acc;
  const auto w = ws.weights();
  const auto x = ws.values();
  for (std::size_t i = 0; i < ws.size(); ++i) acc.add(w[i] * std::sqrt(x[i]));
  return acc.value();
}

}  // namespace

double arithmetic_mean(const WeightedSample& ws) {
  CompensatedSum acc;
  const auto w = ws.weights();
  const auto x = ws.values();
  for (std::size_t i = 0; i < ws.size(); ++i) acc.add(w[i] * x[i]);
  return acc.value();
}

double geometric_mean(const WeightedSample& ws) {
  if (ws.min_value() == 0.0) return 0.0;
  if (ws.is_constant()) return ws.min_value();
  CompensatedSum acc;
  const auto w = ws.weights();
  const auto x = ws.values();
  for (std::size_t i = 0; i < ws.size(); ++i) acc.add(w[i] * std::log(x[i]));
  return std::exp(acc.value());
}

double power_mean(const WeightedSample& ws, double s) {
  if (!std::isfinite(s) || !(s > 0.0)) {
    std::ostringstream os;
    os << "power_mean: exponent s must be finite and > 0, got " << s;
    throw ParameterError(os.str());
  }
  if (s == 1.0) return arithmetic_mean(ws);
  if (ws.is_constant()) return ws.min_value();

  // Factor out the maximum so that x^s cannot overflow for large s.
  const double top = ws.max_value();
  CompensatedSum acc;
  const auto w = ws.weights();
  const auto x = ws.values();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    acc.add(w[i] * std::pow(x[i] / top, s));
  }
  return top * std::pow(acc.value(), 1.0 / s);
}

double sqrt_variance(const WeightedSample& ws) {
  if (ws.is_constant()) return 0.0;
  const double mean = sqrt_mean(ws);
  CompensatedSum acc;
  const auto w = ws.weights();
  const auto x = ws.values();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const double r = std::sqrt(x[i]) - mean;
    acc.add(w[i] * r * r);
  }
  return acc.value();
}

double variance(const WeightedSample& ws) {
  if (ws.is_constant()) return 0.0;
  const double mean = arithmetic_mean(ws);
  CompensatedSum acc;
  const auto w = ws.weights();
  const auto x = ws.values();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const double r = x[i] - mean;
    acc.add(w[i] * r * r);
  }
  return acc.value();
}

double amgm_gap(const WeightedSample& ws) {
  if (ws.is_constant()) return 0.0;
  const double am = arithmetic_mean(ws);
  if (ws.min_value() == 0.0) return am;

  CompensatedSum log_ratio;
  const auto w = ws.weights();
  const auto x = ws.values();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const double d = (x[i] - am) / am;
    log_ratio.add(w[i] * log1p_minus_identity(d));
  }
  return -am * std::expm1(log_ratio.value());
}

}  // namespace amgm
