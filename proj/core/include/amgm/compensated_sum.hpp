#pragma once

#include <ranges>

namespace amgm {

/// Error-free transformation a + b = sum + error (Knuth's TwoSum).
struct TwoSum {
  double sum;
  double error;
};

inline TwoSum two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  return {s, (a - av) + (b - bv)};
}

/*!
  Neumaier's variant of Kahan summation.

  Unlike plain Kahan, the compensation stays correct when an incoming term is
  larger in magnitude than the running sum, which matters for mixed-sign
  accumulations such as centered residuals.
*/
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) noexcept : sum_(initial) {}

  void add(double value) noexcept {
    const auto [s, e] = two_sum(sum_, value);
    sum_ = s;
    compensation_ += e;
  }

  CompensatedSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

template <std::ranges::input_range R>
[[nodiscard]] double compensated_sum(R&& range) noexcept {
  CompensatedSum acc;
  for (const double v : range) acc.add(v);
  return acc.value();
}

}  // namespace amgm
