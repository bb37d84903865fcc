#include <cmath>
#include <random>

#include "doctest.h"

#include "amgm/errors.hpp"
#include "amgm/means.hpp"
#include "amgm/refined_bounds.hpp"
#include "test_support.hpp"

using namespace amgm;
using amgm::testing::relative_difference;

TEST_CASE("refined upper bound examples") {
  CHECK(refined_amgm_upper(WeightedSample::uniform({6.0, 6.0, 6.0})) == 6.0);

  const WeightedSample half({0.5, 0.5}, {1.0, 4.0});
  CHECK(refined_amgm_upper(half) == 2.25);
  CHECK(geometric_mean(half) == doctest::Approx(2.0).epsilon(1e-15));

  const auto family = WeightedSample::uniform({0.0, 1.0, 1.0, 1.0});
  CHECK(refined_amgm_upper(family) == 9.0 / 16.0);
  CHECK(geometric_mean(family) == 0.0);
}

TEST_CASE("Cartwright-Field examples") {
  {
    const auto [lo, hi] = cartwright_field_bounds(WeightedSample({0.5, 0.5}, {1.0, 2.0}));
    CHECK(lo == 0.0625);
    CHECK(hi == 0.125);
    const double gap = amgm_gap(WeightedSample({0.5, 0.5}, {1.0, 2.0}));
    CHECK(gap == doctest::Approx(1.5 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(lo <= gap);
    CHECK(gap <= hi);
  }
  {
    const auto [lo, hi] = cartwright_field_bounds(WeightedSample::uniform({3.0, 3.0}));
    CHECK(lo == 0.0);
    CHECK(hi == 0.0);
  }
  {
    const WeightedSample ws({0.25, 0.75}, {1.0, 4.0});
    const auto [lo, hi] = cartwright_field_bounds(ws);
    CHECK(lo == doctest::Approx(27.0 / 128.0).epsilon(1e-15));
    CHECK(hi == doctest::Approx(27.0 / 32.0).epsilon(1e-15));
    // 3.25 - 4^(3/4) in 50 digits
    const double gap = static_cast<double>(amgm::testing::BigFloat("3.25") -
                                           pow(amgm::testing::BigFloat(4), 0.75));
    CHECK(relative_difference(amgm_gap(ws), gap) <= 1e-15);
    CHECK(gap == doctest::Approx(0.42157287525380990).epsilon(1e-15));
  }
}

TEST_CASE("Cartwright-Field rejects zero values") {
  try {
    (void)cartwright_field_bounds(WeightedSample({0.5, 0.5}, {0.0, 2.0}));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("undefined for zero values") != std::string::npos);
  }
}

TEST_CASE("verify_chain examples") {
  const auto constant = verify_chain(WeightedSample::uniform({2.5, 2.5, 2.5, 2.5}));
  CHECK(constant.chain_ok);
  CHECK(constant.gap == 0.0);
  CHECK(constant.sqrt_var == 0.0);
  CHECK(constant.cf_lower == 0.0);
  CHECK(constant.cf_upper == 0.0);
  CHECK(constant.refined_upper == constant.am);

  const auto half = verify_chain(WeightedSample({0.5, 0.5}, {1.0, 4.0}));
  CHECK(half.chain_ok);
  CHECK(half.refined_upper == 2.25);
  CHECK(half.power_mean_half == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(half.tolerance_used == kChainTolerance);

  const auto zero = verify_chain(WeightedSample({0.5, 0.5}, {0.0, 4.0}));
  CHECK(zero.chain_ok);
  CHECK_FALSE(zero.cf_lower.has_value());
  CHECK_FALSE(zero.cf_upper.has_value());

  CHECK_THROWS_AS((void)verify_chain(WeightedSample({1.0}, {1.0}), Tolerance{0.0, 0.0}),
                  ParameterError);
}

TEST_CASE("property: random chains hold and the report is self-consistent") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20000; ++i) {
    const auto ws = amgm::testing::random_sample(rng);
    const auto r = verify_chain(ws);
    REQUIRE(r.chain_ok);
    CHECK(r.refined_upper == r.am - r.sqrt_var);
    CHECK(std::abs(r.gap - (r.am - r.gm)) <= 1e-12 * r.am);
    CHECK(r.cf_lower.has_value() == (ws.min_value() > 0.0));
  }
}

TEST_CASE("property: refined bound equals the power mean of order 1/2") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 10000; ++i) {
    const auto ws = amgm::testing::random_sample(rng);
    CHECK(relative_difference(refined_amgm_upper(ws), power_mean(ws, 0.5)) <= 1e-12);
  }
}

TEST_CASE("property: the refinement is strict off the equality point") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5000; ++i) {
    const auto ws = amgm::testing::random_sample(rng);
    if (ws.is_constant()) continue;
    CHECK(refined_amgm_upper(ws) < arithmetic_mean(ws));
  }
  const auto near = WeightedSample({0.5, 0.5}, {1.0, 1.001});
  CHECK(refined_amgm_upper(near) < arithmetic_mean(near));
  // the correction falls below the resolution of the mean here, but the
  // variance itself stays strictly positive
  CHECK(sqrt_variance(WeightedSample({0.5, 0.5}, {1.0, 1.0 + 1e-12})) > 0.0);
  const auto flat = WeightedSample::uniform({0.75, 0.75, 0.75});
  CHECK(relative_difference(refined_amgm_upper(flat), arithmetic_mean(flat)) <= 1e-12);
}

TEST_CASE("property: Cartwright-Field sandwich on strictly positive samples") {
  std::mt19937_64 rng(24);
  amgm::testing::SampleSpec spec;
  spec.strictly_positive = true;
  for (int i = 0; i < 10000; ++i) {
    const auto ws = amgm::testing::random_sample(rng, spec);
    const auto [lo, hi] = cartwright_field_bounds(ws);
    const double gap = amgm_gap(ws);
    const double slack = 1e-9 * arithmetic_mean(ws);
    CHECK(lo <= gap + slack);
    CHECK(gap <= hi + slack);
  }
}

TEST_CASE("property: homogeneity of the refined and Cartwright-Field bounds") {
  std::mt19937_64 rng(25);
  amgm::testing::SampleSpec spec;
  spec.strictly_positive = true;
  for (int i = 0; i < 1000; ++i) {
    const auto ws = amgm::testing::random_sample(rng, spec);
    const auto [lo, hi] = cartwright_field_bounds(ws);
    for (double c : {1e-8, 1e8}) {
      const auto s = ws.scaled(c);
      const auto [slo, shi] = cartwright_field_bounds(s);
      CHECK(relative_difference(refined_amgm_upper(s), c * refined_amgm_upper(ws)) <= 1e-12);
      CHECK(relative_difference(slo, c * lo) <= 1e-12);
      CHECK(relative_difference(shi, c * hi) <= 1e-12);
    }
  }
}
