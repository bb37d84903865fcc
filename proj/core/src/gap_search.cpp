#include "amgm/gap_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <sstream>
#include <thread>
#include <utility>

#include "amgm/errors.hpp"
#include "amgm/means.hpp"

namespace amgm {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Parameter value that decodes to an exact zero (weight share or value).
constexpr double kVanishing = -800.0;
// exp(z - max z) below exp(-700) is flushed to 0 instead of becoming subnormal.
constexpr double kZeroLog = -700.0;
// Variance below this is treated as the equality manifold.
constexpr double kMinVariance = 1e-300;
// Consecutive failed sweeps before a restart is considered converged.
constexpr int kMaxHalvings = 60;

std::string show(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double spare_mass(std::size_t n, double delta) {
  return std::max(0.0, 1.0 - static_cast<double>(n) * delta);
}

struct Candidate {
  std::vector<double> weights;
  std::vector<double> values;
};

// params = (w_1..w_n, z_1..z_n)
Candidate decode(const std::vector<double>& params, std::size_t n, double delta) {
  Candidate c{std::vector<double>(n), std::vector<double>(n)};

  const auto w = std::span(params).first(n);
  const auto z = std::span(params).subspan(n, n);

  const double wmax = *std::max_element(w.begin(), w.end());
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c.weights[i] = std::exp(w[i] - wmax);
    total += c.weights[i];
  }
  const double spare = spare_mass(n, delta);
  for (double& a : c.weights) a = delta + spare * (a / total);

  const double zmax = *std::max_element(z.begin(), z.end());
  for (std::size_t i = 0; i < n; ++i) {
    const double t = z[i] - zmax;
    c.values[i] = t < kZeroLog ? 0.0 : std::exp(t);
  }
  return c;
}

bool lexicographically_less(const Candidate& a, const Candidate& b) {
  if (a.weights != b.weights) return a.weights < b.weights;
  return a.values < b.values;
}

struct Evaluation {
  double ratio = kNegInf;
  Candidate point;
};

// Strictly better ratio, or equal ratio and lexicographically smaller sample.
bool improves(const Evaluation& cand, const Evaluation& incumbent) {
  if (cand.ratio != incumbent.ratio) return cand.ratio > incumbent.ratio;
  return lexicographically_less(cand.point, incumbent.point);
}

struct RestartOutcome {
  Evaluation best;
  std::size_t evaluations = 0;
  std::vector<double> trace;
};

class Restart {
 public:
  Restart(const SearchConfig& cfg, const SampleObserver& observer)
      : cfg_(cfg), observer_(observer) {}

  RestartOutcome run(std::vector<double> params) {
    RestartOutcome out;
    Evaluation current = evaluate(params, out.evaluations);
    out.trace.reserve(cfg_.iterations);

    double step = cfg_.step_scale;
    int failures = 0;
    for (std::size_t it = 0; it < cfg_.iterations; ++it) {
      bool moved = false;
      for (std::size_t k = 0; k < params.size(); ++k) {
        for (const double sign : {1.0, -1.0}) {
          auto trial = params;
          trial[k] += sign * step;
          Evaluation e = evaluate(trial, out.evaluations);
          if (improves(e, current)) {
            params = std::move(trial);
            current = std::move(e);
            moved = true;
            break;
          }
        }
      }
      out.trace.push_back(current.ratio);
      if (moved) {
        failures = 0;
      } else {
        step *= 0.5;
        if (++failures >= kMaxHalvings) break;
      }
    }
    out.best = std::move(current);
    return out;
  }

 private:
  Evaluation evaluate(const std::vector<double>& params, std::size_t& counter) {
    ++counter;
    Evaluation e{kNegInf, decode(params, cfg_.n, cfg_.delta)};
    const WeightedSample ws(e.point.weights, e.point.values);
    if (observer_) observer_(ws);
    if (sqrt_variance(ws) >= kMinVariance) e.ratio = gap_variance_ratio(ws);
    return e;
  }

  const SearchConfig& cfg_;
  const SampleObserver& observer_;
};

std::vector<double> floor_family_params(std::size_t n) {
  std::vector<double> p(2 * n, 0.0);
  p[0] = kVanishing;
  p[n] = kVanishing;
  return p;
}

std::vector<double> random_params(std::size_t n, std::uint64_t stream_seed) {
  std::mt19937_64 rng(stream_seed);
  std::normal_distribution<double> weight_dist(0.0, 1.0);
  std::uniform_real_distribution<double> log_value_dist(-8.0, 0.0);
  std::bernoulli_distribution zero_dist(0.15);

  std::vector<double> p(2 * n);
  for (std::size_t i = 0; i < n; ++i) p[i] = weight_dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = log_value_dist(rng);
    p[n + i] = zero_dist(rng) ? kVanishing : z;
  }
  return p;
}

}  // namespace

double gap_variance_ratio(const WeightedSample& ws) {
  const double var = sqrt_variance(ws);
  if (!(var > 0.0)) throw DomainError("ratio undefined at equality point");
  return amgm_gap(ws) / var;
}

std::vector<CanonicalExample> canonical_counterexamples(std::size_t n, double alpha) {
  if (n < 2) {
    throw ParameterError("canonical_counterexamples: n must be >= 2, got " +
                         std::to_string(n));
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw ParameterError("canonical_counterexamples: alpha must lie in (0, 1/2), got " +
                         show(alpha));
  }
  std::vector<double> ones(n, 1.0);
  ones[0] = 0.0;

  std::vector<CanonicalExample> out;
  out.push_back({"A", WeightedSample::uniform(std::move(ones)), static_cast<double>(n)});
  out.push_back({"B", WeightedSample({alpha, 1.0 - alpha}, {0.0, 1.0}), 1.0 / alpha});
  return out;
}

CanonicalExample floor_family(std::size_t n, double delta) {
  SearchConfig probe;
  probe.n = n;
  probe.delta = delta;
  probe.validate();
  const auto c = decode(floor_family_params(n), n, delta);
  return {"floor", WeightedSample(c.weights, c.values), 1.0 / delta};
}

void SearchConfig::validate() const {
  if (n < 2) throw ParameterError("search: n must be >= 2, got " + std::to_string(n));
  if (!std::isfinite(delta) || !(delta > 0.0)) {
    throw ParameterError("search: delta must be positive, got " + show(delta));
  }
  if (static_cast<double>(n) * delta > 1.0 + 1e-12) {
    throw ParameterError("search: delta must be <= 1/n (delta * n <= 1), got delta = " +
                         show(delta) + " for n = " + std::to_string(n));
  }
  if (restarts < 1) throw ParameterError("search: restarts must be >= 1");
  if (iterations < 1) throw ParameterError("search: iterations must be >= 1");
  if (!std::isfinite(step_scale) || !(step_scale > 0.0)) {
    throw ParameterError("search: step_scale must be finite and > 0, got " +
                         show(step_scale));
  }
  if (threads < 1) throw ParameterError("search: threads must be >= 1");
}

SearchResult maximize_ratio(const SearchConfig& config, const SampleObserver& observer) {
  config.validate();

  std::vector<RestartOutcome> outcomes(config.restarts);
  auto run_one = [&](std::size_t r) {
    auto start = r == 0 ? floor_family_params(config.n)
                        : random_params(config.n, config.seed + r);
    outcomes[r] = Restart(config, observer).run(std::move(start));
  };

  const std::size_t workers = std::min(config.threads, config.restarts);
  if (workers <= 1) {
    for (std::size_t r = 0; r < config.restarts; ++r) run_one(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < config.restarts; r = next++) run_one(r);
      });
    }
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (improves(outcomes[r].best, outcomes[best].best)) best = r;
  }

  SearchResult result{outcomes[best].best.ratio,
                      WeightedSample(outcomes[best].best.point.weights,
                                     outcomes[best].best.point.values),
                      {},
                      0,
                      {}};
  result.restart_ratios.reserve(outcomes.size());
  result.traces.reserve(outcomes.size());
  for (auto& o : outcomes) {
    result.restart_ratios.push_back(o.best.ratio);
    result.evaluations += o.evaluations;
    result.traces.push_back(std::move(o.trace));
  }
  return result;
}

std::vector<RatioRow> ratio_vs_delta_table(std::size_t n, const std::vector<double>& deltas,
                                           const SearchConfig& per_point_config) {
  std::vector<SearchConfig> configs;
  configs.reserve(deltas.size());
  for (const double d : deltas) {
    SearchConfig cfg = per_point_config;
    cfg.n = n;
    cfg.delta = d;
    cfg.validate();
    configs.push_back(cfg);
  }
  std::vector<RatioRow> rows;
  rows.reserve(configs.size());
  for (const auto& cfg : configs) rows.push_back({cfg.delta, maximize_ratio(cfg).best_ratio});
  return rows;
}

}  // namespace amgm
