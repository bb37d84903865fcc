#include "amgm/weighted_sample.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "amgm/compensated_sum.hpp"
#include "amgm/errors.hpp"

namespace amgm {
namespace {

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

WeightedSample::WeightedSample(std::vector<double> weights,
                               std::vector<double> values, WeightPolicy policy)
    : weights_(std::move(weights)), values_(std::move(values)) {
  if (values_.empty()) fail("sample size: n must be >= 1, got an empty sample");
  if (weights_.size() != values_.size()) {
    fail("shape: weights and values must have equal length, got " +
         std::to_string(weights_.size()) + " weights and " +
         std::to_string(values_.size()) + " values");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i])) {
      fail("finiteness: weight " + std::to_string(i) + " is not finite");
    }
    if (!(weights_[i] > 0.0)) {
      fail("positivity: every weight must be > 0, got " + describe(weights_[i]) +
           " at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      fail("finiteness: value " + std::to_string(i) + " is not finite");
    }
    if (!(values_[i] >= 0.0)) {
      fail("nonnegativity: every value must be >= 0, got " + describe(values_[i]) +
           " at index " + std::to_string(i));
    }
  }

  double total = compensated_sum(weights_);
  if (policy == WeightPolicy::kRenormalize) {
    if (std::abs(total - 1.0) > kRenormalizeLimit) {
      fail("normalization: weights sum to " + describe(total) +
           ", more than 1e-6 away from 1; refusing to renormalize");
    }
    for (double& w : weights_) w /= total;
    total = compensated_sum(weights_);
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    fail("normalization: weights must sum to 1 within 1e-12, got " +
         describe(total));
  }

  // +0.0 so that a -0.0 input compares and prints as zero everywhere.
  for (double& x : values_) x += 0.0;
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_ = *lo;
  max_ = *hi;
}

WeightedSample WeightedSample::uniform(std::vector<double> values) {
  const auto n = values.size();
  std::vector<double> weights(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  return WeightedSample(std::move(weights), std::move(values));
}

WeightedSample WeightedSample::scaled(double c) const {
  if (!std::isfinite(c) || !(c > 0.0)) {
    throw ParameterError("scale factor must be finite and > 0, got " + describe(c));
  }
  std::vector<double> v(values_.begin(), values_.end());
  for (double& x : v) x *= c;
  return WeightedSample(weights_, std::move(v));
}

}  // namespace amgm
