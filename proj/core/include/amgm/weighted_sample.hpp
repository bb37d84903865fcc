#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace amgm {

/// Maximum |sum of weights - 1| accepted without renormalization.
inline constexpr double kWeightTolerance = 1e-12;

/// Largest deviation of the weight sum from 1 that renormalization will
/// absorb; anything beyond this is treated as a data error.
inline constexpr double kRenormalizeLimit = 1e-6;

enum class WeightPolicy {
  kStrict,       ///< weights must already sum to 1 within kWeightTolerance
  kRenormalize,  ///< rescale weights whose sum is within kRenormalizeLimit of 1
};

/*!
  A finite probability measure sum_i alpha_i * delta_{x_i} on [0, inf).

  Construction validates every invariant and throws ValidationError naming the
  one that failed:
    - weights and values have the same length n >= 1
    - every weight is finite and > 0
    - |sum of weights - 1| <= kWeightTolerance (after optional renormalization)
    - every value is finite and >= 0
  Instances are immutable.
*/
class WeightedSample {
 public:
  WeightedSample(std::vector<double> weights, std::vector<double> values,
                 WeightPolicy policy = WeightPolicy::kStrict);

  /// Equal weights 1/n on the given values.
  static WeightedSample uniform(std::vector<double> values);

  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  [[nodiscard]] double min_value() const noexcept { return min_; }
  [[nodiscard]] double max_value() const noexcept { return max_; }
  [[nodiscard]] bool is_constant() const noexcept { return min_ == max_; }

  /// Same weights, every value multiplied by c > 0.
  [[nodiscard]] WeightedSample scaled(double c) const;

  friend bool operator==(const WeightedSample&, const WeightedSample&) = default;

 private:
  std::vector<double> weights_;
  std::vector<double> values_;
  double min_ = 0.0;
  double max_ = 0.0;
};

}  // namespace amgm
