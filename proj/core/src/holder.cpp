#include "amgm/holder.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>

#include "amgm/compensated_sum.hpp"
#include "amgm/errors.hpp"

namespace amgm {
namespace {

std::string show(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool is_holder_exponent(double p) { return std::isfinite(p) && p > 1.0; }

void require_common_grid(std::span<const DiscretizedFunction> fs) {
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (!fs[0].same_grid(fs[i])) {
      throw GridError("grid: function " + std::to_string(i) +
                      " does not share the quadrature of function 0");
    }
  }
}

double inner(std::span<const double> w, std::span<const double> a,
             std::span<const double> b) {
  CompensatedSum acc;
  for (std::size_t j = 0; j < w.size(); ++j) acc.add(w[j] * a[j] * b[j]);
  return acc.value();
}

double squared_distance(std::span<const double> w, std::span<const double> a,
                        std::span<const double> b) {
  CompensatedSum acc;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double d = a[j] - b[j];
    acc.add(w[j] * d * d);
  }
  return acc.value();
}

void check_pair(const DiscretizedFunction& f, const DiscretizedFunction& g,
                double p, double q) {
  if (!is_holder_exponent(p) || !is_holder_exponent(q)) {
    throw ParameterError("exponents: p and q must lie in (1, inf), got p = " +
                         show(p) + ", q = " + show(q));
  }
  const double s = 1.0 / p + 1.0 / q;
  if (std::abs(s - 1.0) > kConjugacyTolerance) {
    throw ParameterError("conjugacy: 1/p + 1/q must equal 1 within 1e-12, got " +
                         show(s));
  }
  if (!f.same_grid(g)) {
    throw GridError("grid: f and g do not share the same quadrature");
  }
}

}  // namespace

ExponentTuple::ExponentTuple(std::vector<double> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.size() < 2) {
    throw ValidationError("exponent count: need n >= 2 exponents, got " +
                          std::to_string(exponents_.size()));
  }
  CompensatedSum reciprocal;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (!is_holder_exponent(exponents_[i])) {
      throw ValidationError("exponent range: every p_i must lie in (1, inf), got " +
                            show(exponents_[i]) + " at index " + std::to_string(i));
    }
    reciprocal.add(1.0 / exponents_[i]);
  }
  if (std::abs(reciprocal.value() - 1.0) > kConjugacyTolerance) {
    throw ValidationError(
        "conjugacy: reciprocals of the exponents must sum to 1 within 1e-12, got " +
        show(reciprocal.value()));
  }
}

DiscretizedFunction::DiscretizedFunction(std::vector<double> values,
                                         std::vector<double> quadrature)
    : values_(std::move(values)), quadrature_(std::move(quadrature)) {
  if (values_.empty()) {
    throw ValidationError("grid size: a discretized function needs >= 1 point");
  }
  if (values_.size() != quadrature_.size()) {
    throw ValidationError("shape: values and quadrature must have equal length, got " +
                          std::to_string(values_.size()) + " and " +
                          std::to_string(quadrature_.size()));
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j]) || !(values_[j] >= 0.0)) {
      throw ValidationError("nonnegativity: function values must be finite and >= 0, got " +
                            show(values_[j]) + " at index " + std::to_string(j));
    }
    if (!std::isfinite(quadrature_[j]) || !(quadrature_[j] > 0.0)) {
      throw ValidationError("quadrature: weights must be finite and > 0, got " +
                            show(quadrature_[j]) + " at index " + std::to_string(j));
    }
    values_[j] += 0.0;
  }
}

DiscretizedFunction DiscretizedFunction::on_uniform_grid(std::vector<double> values) {
  auto w = uniform_quadrature(values.size());
  return DiscretizedFunction(std::move(values), std::move(w));
}

bool DiscretizedFunction::same_grid(const DiscretizedFunction& other) const noexcept {
  return quadrature_.size() == other.quadrature_.size() &&
         std::equal(quadrature_.begin(), quadrature_.end(), other.quadrature_.begin(),
                    [](double a, double b) {
                      return std::bit_cast<std::uint64_t>(a) ==
                             std::bit_cast<std::uint64_t>(b);
                    });
}

std::vector<double> uniform_quadrature(std::size_t n) {
  return std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
}

double lp_norm(const DiscretizedFunction& f, double p) {
  if (!std::isfinite(p) || !(p >= 1.0)) {
    throw ParameterError("lp_norm: p must be finite and >= 1, got " + show(p));
  }
  const auto v = f.values();
  const auto w = f.quadrature();
  const double top = *std::max_element(v.begin(), v.end());
  if (top == 0.0) return 0.0;
  CompensatedSum acc;
  for (std::size_t j = 0; j < v.size(); ++j) acc.add(w[j] * std::pow(v[j] / top, p));
  return top * std::pow(acc.value(), 1.0 / p);
}

double product_l1(std::span<const DiscretizedFunction> fs) {
  if (fs.empty()) return 0.0;
  require_common_grid(fs);
  const auto w = fs[0].quadrature();
  CompensatedSum acc;
  for (std::size_t j = 0; j < w.size(); ++j) {
    double prod = w[j];
    for (const auto& f : fs) prod *= f.values()[j];
    acc.add(prod);
  }
  return acc.value();
}

std::vector<double> unit_vector(const DiscretizedFunction& f, double p) {
  const double norm = lp_norm(f, p);
  if (!(norm > 0.0)) {
    throw DomainError("norm: ||f||_p must be > 0; zero functions are excluded");
  }
  std::vector<double> g(f.values().begin(), f.values().end());
  for (double& x : g) x = std::pow(x / norm, 0.5 * p);
  return g;
}

namespace {

struct Dispersion {
  double correction;
  double mean_norm_sq;
};

Dispersion unit_vector_dispersion(std::span<const DiscretizedFunction> fs,
                                  const ExponentTuple& ps) {
  if (fs.size() != ps.size()) {
    throw ValidationError("shape: got " + std::to_string(fs.size()) +
                          " functions for " + std::to_string(ps.size()) + " exponents");
  }
  require_common_grid(fs);

  const std::size_t n = fs.size();
  const std::size_t grid = fs[0].size();
  std::vector<std::vector<double>> g;
  g.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.push_back(unit_vector(fs[i], ps[i]));

  // Divided by the computed sum of 1/p_k (1 up to rounding) so that identical
  // unit vectors have exactly zero dispersion.
  CompensatedSum mass;
  for (std::size_t k = 0; k < n; ++k) mass.add(1.0 / ps[k]);
  std::vector<double> mean(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    CompensatedSum acc;
    for (std::size_t k = 0; k < n; ++k) acc.add(g[k][j] / ps[k]);
    mean[j] = acc.value() / mass.value();
  }

  const auto w = fs[0].quadrature();
  CompensatedSum spread;
  for (std::size_t i = 0; i < n; ++i) spread.add(squared_distance(w, g[i], mean) / ps[i]);
  return {spread.value(), inner(w, mean, mean)};
}

}  // namespace

double holder_correction(std::span<const DiscretizedFunction> fs, const ExponentTuple& ps) {
  return unit_vector_dispersion(fs, ps).correction;
}

HolderReport refined_holder(std::span<const DiscretizedFunction> fs, const ExponentTuple& ps) {
  const auto [correction, mean_norm_sq] = unit_vector_dispersion(fs, ps);

  HolderReport r;
  r.norms.reserve(fs.size());
  r.classical_bound = 1.0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    r.norms.push_back(lp_norm(fs[i], ps[i]));
    r.classical_bound *= r.norms.back();
  }
  r.correction = correction;
  r.mean_unit_vector_norm_sq = mean_norm_sq;
  r.refined_bound = r.classical_bound * (1.0 - correction);
  r.product_l1 = product_l1(fs);
  return r;
}

bool holder_chain_holds(const HolderReport& report, const Tolerance& tol) {
  tol.validate();
  const double slack = tol.allowance(report.classical_bound);
  return report.product_l1 <= report.refined_bound + slack &&
         report.refined_bound <= report.classical_bound + slack;
}

double two_function_correction(const DiscretizedFunction& f, const DiscretizedFunction& g,
                               double p, double q) {
  check_pair(f, g, p, q);
  const auto u = unit_vector(f, p);
  const auto v = unit_vector(g, q);
  return squared_distance(f.quadrature(), u, v) / (p * q);
}

double angular_distance(const DiscretizedFunction& f, const DiscretizedFunction& g,
                        double p, double q) {
  check_pair(f, g, p, q);
  const auto u = unit_vector(f, p);
  const auto v = unit_vector(g, q);
  const double c = std::clamp(inner(f.quadrature(), u, v), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace amgm
