#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "amgm/tolerance.hpp"

namespace amgm {

/// Tolerance on |sum_i 1/p_i - 1| for conjugate exponents.
inline constexpr double kConjugacyTolerance = 1e-12;

/// Conjugate Hoelder exponents p_1..p_n: n >= 2, each p_i in (1, inf),
/// sum_i 1/p_i = 1 within kConjugacyTolerance. Throws ValidationError.
class ExponentTuple {
 public:
  explicit ExponentTuple(std::vector<double> exponents);

  [[nodiscard]] std::span<const double> exponents() const noexcept { return exponents_; }
  [[nodiscard]] std::size_t size() const noexcept { return exponents_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return exponents_[i]; }

 private:
  std::vector<double> exponents_;
};

/*!
  A nonnegative function sampled on a grid, integrated against positive
  quadrature weights: the integral of h is sum_j w_j h(u_j).

  Functions that take part in the same product must carry bitwise-equal
  quadrature vectors; nothing is resampled.
*/
class DiscretizedFunction {
 public:
  DiscretizedFunction(std::vector<double> values, std::vector<double> quadrature);

  /// Values on the uniform grid of [0, 1] with N = values.size() cells,
  /// each weighted 1/N.
  static DiscretizedFunction on_uniform_grid(std::vector<double> values);

  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::span<const double> quadrature() const noexcept { return quadrature_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  [[nodiscard]] bool same_grid(const DiscretizedFunction& other) const noexcept;

 private:
  std::vector<double> values_;
  std::vector<double> quadrature_;
};

/// Quadrature weights 1/N for the uniform grid with N cells.
[[nodiscard]] std::vector<double> uniform_quadrature(std::size_t n);

struct HolderReport {
  double product_l1 = 0.0;       ///< || prod_i f_i ||_1
  double classical_bound = 0.0;  ///< prod_i ||f_i||_{p_i}
  double correction = 0.0;       ///< in [0, 1]
  double refined_bound = 0.0;    ///< classical_bound * (1 - correction)
  std::vector<double> norms;     ///< ||f_i||_{p_i}
  double mean_unit_vector_norm_sq = 0.0;  ///< || sum_k g_k / p_k ||_2^2

  friend bool operator==(const HolderReport&, const HolderReport&) = default;
};

/// (sum_j w_j f_j^p)^(1/p) for finite p >= 1; ParameterError otherwise.
[[nodiscard]] double lp_norm(const DiscretizedFunction& f, double p);

/// sum_j w_j prod_i f_i(u_j). GridError when the grids differ.
[[nodiscard]] double product_l1(std::span<const DiscretizedFunction> fs);

/// The normalized function (f / ||f||_p)^(p/2), a unit vector in the
/// quadrature 2-norm. DomainError when ||f||_p = 0.
[[nodiscard]] std::vector<double> unit_vector(const DiscretizedFunction& f, double p);

/*!
  Dispersion of the unit vectors g_i = (f_i / ||f_i||_{p_i})^{p_i/2} about
  their weighted mean g = sum_k g_k / p_k:

      sum_i (1/p_i) || g_i - g ||_2^2   (= 1 - ||g||_2^2)

  evaluated in the centered form. Throws ValidationError on a count mismatch,
  GridError on differing grids and DomainError on a zero-norm function.
*/
[[nodiscard]] double holder_correction(std::span<const DiscretizedFunction> fs,
                                       const ExponentTuple& ps);

/// Hoelder's bound tightened by holder_correction().
[[nodiscard]] HolderReport refined_holder(std::span<const DiscretizedFunction> fs,
                                          const ExponentTuple& ps);

/// product_l1 <= refined_bound <= classical_bound within tol, scaled by the
/// classical bound.
[[nodiscard]] bool holder_chain_holds(const HolderReport& report,
                                      const Tolerance& tol = kChainTolerance);

/// Two-function correction (1/(pq)) || u - v ||_2^2 with
/// u = (f/||f||_p)^{p/2}, v = (g/||g||_q)^{q/2}. ParameterError unless
/// p, q in (1, inf) with 1/p + 1/q = 1 within kConjugacyTolerance.
[[nodiscard]] double two_function_correction(const DiscretizedFunction& f,
                                             const DiscretizedFunction& g,
                                             double p, double q);

/// Angle arccos<u, v> in [0, pi] between the unit vectors above; the
/// two-function correction equals (2/(pq)) (1 - cos angle).
[[nodiscard]] double angular_distance(const DiscretizedFunction& f,
                                      const DiscretizedFunction& g,
                                      double p, double q);

}  // namespace amgm
