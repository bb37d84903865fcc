// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check runs at its stated tolerance; the detail column shows
// the worst observed deviation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "amgm/gap_search.hpp"
#include "amgm/holder.hpp"
#include "amgm/means.hpp"
#include "amgm/refined_bounds.hpp"
#include "commands.hpp"
#include "test_support.hpp"

using namespace amgm;
using amgm::testing::relative_difference;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst value of one measured deviation.
struct Worst {
  double value = 0.0;
  void see(double v) { value = std::max(value, v); }
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome chain_suite() {
  std::mt19937_64 rng(1001);
  std::size_t violations = 0;
  std::size_t zeros = 0;
  Worst excess;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 100'000; ++i) {
    const auto ws = amgm::testing::random_sample(rng);
    if (ws.min_value() == 0.0) ++zeros;
    const auto r = verify_chain(ws);
    const double slack = 1e-9 * r.am;
    const double e = std::max(r.gm - r.refined_upper, r.refined_upper - r.am);
    excess.see(std::max(e, 0.0) / std::max(r.am, 1e-300));
    if (!r.chain_ok || e > slack) ++violations;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {violations == 0 && secs < 5.0,
          fmt("100000 samples, %zu with a zero, %zu violations, worst rel excess %.2e, %.2f s",
              zeros, violations, excess.value, secs)};
}

Outcome power_mean_identity() {
  std::mt19937_64 rng(1002);
  Worst worst;
  for (int i = 0; i < 10'000; ++i) {
    const auto ws = amgm::testing::random_sample(rng);
    worst.see(relative_difference(refined_amgm_upper(ws), power_mean(ws, 0.5)));
  }
  return {worst.value <= 1e-12, fmt("10000 samples, max rel diff %.2e", worst.value)};
}

Outcome family_a() {
  Worst worst;
  for (std::size_t n : {10u, 100u, 1000u, 1'000'000u}) {
    std::vector<double> x(n, 1.0);
    x[0] = 0.0;
    worst.see(relative_difference(gap_variance_ratio(WeightedSample::uniform(x)),
                                  static_cast<double>(n)));
  }
  return {worst.value <= 1e-9, fmt("n in {10,100,1000,1e6}, max rel diff %.2e", worst.value)};
}

Outcome family_b() {
  Worst worst;
  for (double alpha : {0.1, 0.01, 0.001}) {
    const WeightedSample ws({alpha, 1.0 - alpha}, {0.0, 1.0});
    worst.see(relative_difference(gap_variance_ratio(ws), 1.0 / alpha));
  }
  return {worst.value <= 1e-9, fmt("alpha in {0.1,0.01,0.001}, max rel diff %.2e", worst.value)};
}

Outcome cartwright_field() {
  std::mt19937_64 rng(1005);
  amgm::testing::SampleSpec spec;
  spec.strictly_positive = true;
  std::size_t violations = 0;
  for (int i = 0; i < 10'000; ++i) {
    const auto ws = amgm::testing::random_sample(rng, spec);
    const auto [lo, hi] = cartwright_field_bounds(ws);
    const double gap = amgm_gap(ws);
    const double slack = 1e-9 * arithmetic_mean(ws);
    if (lo > gap + slack || gap > hi + slack) ++violations;
  }
  const WeightedSample hand({0.5, 0.5}, {1.0, 2.0});
  const auto [lo, hi] = cartwright_field_bounds(hand);
  const double gap = amgm_gap(hand);
  const bool hand_ok = lo == 0.0625 && hi == 0.125 && std::abs(gap - 0.085786) < 5e-7 &&
                       relative_difference(gap, 1.5 - std::sqrt(2.0)) <= 1e-12;
  return {violations == 0 && hand_ok,
          fmt("10000 samples, %zu violations; hand instance (%.4f, %.6f, %.3f)", violations, lo,
              gap, hi)};
}

Outcome holder_suite() {
  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<std::size_t> n_dist(2, 5);
  std::size_t chain_failures = 0;
  std::size_t pairs = 0;
  Worst identity;
  Worst pair_diff;
  for (int i = 0; i < 10'000; ++i) {
    const auto inst = amgm::testing::random_instance(rng, n_dist(rng));
    const ExponentTuple ps(inst.ps);
    const auto r = refined_holder(inst.fs, ps);
    const double slack = 1e-9 * r.classical_bound;
    if (r.product_l1 > r.refined_bound + slack || r.refined_bound > r.classical_bound + slack) {
      ++chain_failures;
    }
    identity.see(std::abs(r.correction - (1.0 - r.mean_unit_vector_norm_sq)));
    if (inst.fs.size() == 2) {
      ++pairs;
      pair_diff.see(std::abs(
          two_function_correction(inst.fs[0], inst.fs[1], inst.ps[0], inst.ps[1]) - r.correction));
    }
  }
  return {chain_failures == 0 && identity.value <= 1e-12 && pair_diff.value <= 1e-12,
          fmt("10000 instances, %zu chain failures, identity %.2e, n=2 form %.2e over %zu",
              chain_failures, identity.value, pair_diff.value, pairs)};
}

Outcome holder_equality() {
  std::mt19937_64 rng(1007);
  std::uniform_real_distribution<double> p_dist(std::nextafter(1.0, 2.0), 4.0);
  std::uniform_int_distribution<std::size_t> len_dist(1, 64);
  Worst correction;
  Worst bound;
  for (int i = 0; i < 10'000; ++i) {
    const std::size_t len = len_dist(rng);
    const DiscretizedFunction f(amgm::testing::random_positive_values(rng, len),
                                amgm::testing::random_weights(rng, len));
    // p at the upper end of (1, 4] is inclusive here
    const double p = i == 0 ? 4.0 : p_dist(rng);
    const double q = p / (p - 1.0);
    std::vector<double> g;
    for (double v : f.values()) g.push_back(std::pow(v, p - 1.0));
    const std::vector<DiscretizedFunction> pair{
        f, DiscretizedFunction(g, {f.quadrature().begin(), f.quadrature().end()})};
    const auto r = refined_holder(pair, ExponentTuple({p, q}));
    correction.see(r.correction);
    bound.see(relative_difference(r.product_l1, r.classical_bound));
  }
  return {correction.value <= 1e-12 && bound.value <= 1e-9,
          fmt("10000 instances, max correction %.2e, max rel |l1 - classical| %.2e",
              correction.value, bound.value)};
}

Outcome repetition_oracle() {
  std::mt19937_64 rng(1008);
  std::uniform_int_distribution<int> m_dist(2, 12);
  std::uniform_real_distribution<double> v_dist(0.0, 10.0);
  Worst worst;
  for (int i = 0; i < 1000; ++i) {
    const int m = m_dist(rng);
    // random composition of m into positive parts k_1 + ... + k_n
    std::vector<int> parts;
    int left = m;
    while (left > 0) {
      const int k = std::uniform_int_distribution<int>(1, left)(rng);
      parts.push_back(k);
      left -= k;
    }
    if (parts.size() == 1) continue;
    std::vector<double> w;
    std::vector<double> x;
    std::vector<double> repeated;
    for (int k : parts) {
      const double v = std::bernoulli_distribution(0.05)(rng) ? 0.0 : v_dist(rng);
      w.push_back(static_cast<double>(k) / m);
      x.push_back(v);
      repeated.insert(repeated.end(), static_cast<std::size_t>(k), v);
    }
    const double gm = geometric_mean(WeightedSample(w, x));
    worst.see(relative_difference(gm, geometric_mean(WeightedSample::uniform(repeated))));
    worst.see(relative_difference(gm, amgm::testing::repeated_geometric_mean(repeated)));
  }
  return {worst.value <= 1e-12, fmt("1000 instances, max rel diff %.2e", worst.value)};
}

Outcome search_determinism() {
  const std::vector<std::string> args{"search", "--n", "3", "--delta", "0.05", "--seed", "7",
                                      "--restarts", "16"};
  std::ostringstream out1;
  std::ostringstream out2;
  std::ostringstream err;
  const int c1 = cli::run(args, out1, err);
  const int c2 = cli::run(args, out2, err);
  double best = -INFINITY;
  std::istringstream lines(out1.str());
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("best ratio", 0) == 0) best = std::stod(line.substr(line.find_last_of(' ')));
  }
  const bool identical = out1.str() == out2.str();
  return {c1 == 0 && c2 == 0 && identical && best >= 20.0 - 1e-6,
          fmt("exit %d/%d, outputs %s, best_ratio %.17g", c1, c2,
              identical ? "identical" : "DIFFER", best)};
}

Outcome homogeneity() {
  std::mt19937_64 rng(1010);
  Worst worst;
  for (int i = 0; i < 1000; ++i) {
    const auto ws = amgm::testing::random_sample(rng);
    const auto r = verify_chain(ws);
    const double ratio = ws.is_constant() ? 0.0 : gap_variance_ratio(ws);
    for (double c : {1e-8, 1.0, 1e8}) {
      const auto s = verify_chain(ws.scaled(c));
      worst.see(relative_difference(s.am, c * r.am));
      worst.see(relative_difference(s.gm, c * r.gm));
      worst.see(relative_difference(s.power_mean_half, c * r.power_mean_half));
      worst.see(relative_difference(s.sqrt_var, c * r.sqrt_var));
      worst.see(relative_difference(s.refined_upper, c * r.refined_upper));
      worst.see(relative_difference(s.gap, c * r.gap));
      if (r.cf_lower) {
        worst.see(relative_difference(*s.cf_lower, c * *r.cf_lower));
        worst.see(relative_difference(*s.cf_upper, c * *r.cf_upper));
      }
      if (!ws.is_constant()) {
        worst.see(relative_difference(gap_variance_ratio(ws.scaled(c)), ratio));
      }
    }
  }
  return {worst.value <= 1e-12, fmt("1000 samples x 3 scales, max rel diff %.2e", worst.value)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"chain gm <= refined <= am", chain_suite},
      {"refined bound equals power mean of order 1/2", power_mean_identity},
      {"equal weights on (0,1,...,1) give ratio n", family_a},
      {"weights (a, 1-a) on (0,1) give ratio 1/a", family_b},
      {"Cartwright-Field sandwich", cartwright_field},
      {"refined Hoelder suite", holder_suite},
      {"Hoelder equality case g = f^(p-1)", holder_equality},
      {"rational weights match repetition", repetition_oracle},
      {"search determinism and floor guarantee", search_determinism},
      {"homogeneity and ratio invariance", homogeneity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  [%2zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
