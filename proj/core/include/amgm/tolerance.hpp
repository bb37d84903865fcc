#pragma once

namespace amgm {

/// Slack allowed when checking an inequality chain in floating point.
struct Tolerance {
  double relative = 1e-9;
  double absolute = 0.0;

  /// Throws ParameterError unless relative > 0, absolute >= 0, both finite.
  void validate() const;

  /// Permitted violation for quantities of magnitude `scale`. Falls back to
  /// the absolute part alone when scale is below 1e-300.
  [[nodiscard]] double allowance(double scale) const noexcept;

  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

/// Default chain tolerance: 1e-9 relative to the arithmetic mean.
inline constexpr Tolerance kChainTolerance{1e-9, 0.0};

}  // namespace amgm
