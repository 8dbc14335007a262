#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle_helpers.hpp"
#include "suprec/bounds.hpp"

using namespace suprec;

TEST_CASE("gauss channel lower bound") {
  CHECK(std::abs(gauss_channel_lower(4, 2, 2.0) - oracle::ref::kGauss_4_2_2) <
        1e-12);
  // The denominator diverges with the signal power, so the bound decays
  // toward zero (logarithmically).
  CHECK(gauss_channel_lower(4, 2, 1e6) < gauss_channel_lower(4, 2, 2.0));
  CHECK(gauss_channel_lower(4, 2, 1e300) < 0.01);
  CHECK_THROWS_AS(gauss_channel_lower(4, 2, 0.0), DomainError);
  CHECK_THROWS_AS(gauss_channel_lower(4, 2, -1.0), DomainError);
}

TEST_CASE("f1 and f2 frozen values") {
  CHECK(std::abs(f1_bound(4, 2, 1.0) - oracle::ref::kF1_4_2_1) < 1e-12);
  CHECK(std::abs(f2_bound(4, 2, 1.0) - oracle::ref::kF2_4_2_1) < 1e-12);
  CHECK(std::abs(f1_bound(12, 2, std::sqrt(0.1)) -
                 oracle::ref::kF1_12_2_b2_01) < 1e-10);
}

TEST_CASE("f1/f2 degenerate cases") {
  CHECK_THROWS_AS(f1_bound(4, 4, 1.0), DomainError);
  CHECK_THROWS_AS(f2_bound(4, 4, 1.0), DomainError);
  CHECK_THROWS_AS(f1_bound(4, 2, 0.0), DomainError);
  // p - k + 1 = 2 makes the f2 numerator negative; the value is a vacuous
  // but well-defined bound.
  CHECK(f2_bound(5, 4, 1.0) < 0.0);
}

TEST_CASE("f1 denominator is strictly below the channel denominator") {
  // 1/2 ln(1 + k b^2 (1 - k/p)) < 1/2 ln(1 + ||beta||^2) for constant-
  // magnitude signals with k < p.
  for (int p : {4, 9, 17})
    for (int k = 1; k < p; ++k)
      for (double beta : {0.3, 1.0, 2.5}) {
        const double lhs = 0.5 * std::log1p(k * beta * beta *
                                            (1.0 - static_cast<double>(k) / p));
        const double rhs = 0.5 * std::log1p(k * beta * beta);
        CHECK(lhs < rhs);
      }
}

TEST_CASE("dense threshold report") {
  const BoundReport r = dense_threshold(ProblemParams::make(1, 4, 2, 1.0));
  CHECK(std::abs(r.f1 - oracle::ref::kF1_4_2_1) < 1e-12);
  CHECK(std::abs(r.f2 - oracle::ref::kF2_4_2_1) < 1e-12);
  CHECK(r.k_minus_1 == 1.0);
  CHECK(r.dense_threshold == r.f1);
  CHECK_FALSE(r.g1.has_value());
  CHECK_FALSE(r.sparse_threshold.has_value());

  // Huge beta_min drives both fractions to zero; k - 1 is binding.
  const BoundReport big = dense_threshold(ProblemParams::make(1, 4, 2, 1e9));
  CHECK(big.dense_threshold == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("g1/g2 at gamma = 1 match the closed collapse forms") {
  const ProblemParams params = ProblemParams::make(1, 4, 2, 1.0, 1.0);
  CHECK(std::abs(g1_bound(params) - oracle::ref::kG1_4_2_1_gamma1) < 1e-6);
  CHECK(std::abs(g2_bound(params) - oracle::ref::kG2_4_2_1_gamma1) < 1e-6);
  // The gamma = 1 denominator is exactly the general corollary bound.
  const CorollaryBounds cb = corollary_bounds(params);
  CHECK(std::abs(g1_bound(params) - cb.g1_general) < 1e-6);
  CHECK(std::abs(g2_bound(params) - cb.g2_general) < 1e-6);
}

TEST_CASE("g1 blows up as beta_min shrinks") {
  // The mixture entropy approaches the pure-noise entropy, so the
  // denominator approaches zero from above.
  const double g_small = g1_bound(ProblemParams::make(1, 4, 2, 0.01, 1.0));
  const double g_mid = g1_bound(ProblemParams::make(1, 4, 2, 0.1, 1.0));
  const double g_one = g1_bound(ProblemParams::make(1, 4, 2, 1.0, 1.0));
  CHECK(g_small > 1000.0);
  CHECK(g_small > g_mid);
  CHECK(g_mid > g_one);
  CHECK_THROWS_AS(g1_bound(ProblemParams::make(1, 4, 2, 0.0, 1.0)),
                  DomainError);
}

TEST_CASE("corollary bounds") {
  const ProblemParams params = ProblemParams::make(1, 4, 2, 1.0, 0.25);
  const CorollaryBounds cb = corollary_bounds(params);
  CHECK(cb.regime == Regime::Degraded);
  CHECK(std::abs(cb.g1_regime - oracle::ref::kCorG1_4_2_1_gamma025) < 1e-12);
  // Case (a) at any params equals f1 without the (1 - k/p) factor.
  const double expected_general =
      (log_choose(4, 2) - 1.0) / (0.5 * std::log1p(2.0));
  CHECK(std::abs(cb.g1_general - expected_general) < 1e-12);
}

TEST_CASE("corollary bounds lower-bound the quadrature values") {
  const double tol = 1e-6;
  for (int k : {2, 4})
    for (double gamma : {0.1, 0.3, 0.7, 1.0})
      for (double beta : {0.5, 1.0}) {
        const ProblemParams params = ProblemParams::make(1, 16, k, beta, gamma);
        const CorollaryBounds cb = corollary_bounds(params);
        const double g1 = g1_bound(params);
        const double g2 = g2_bound(params);
        CHECK(cb.g1_general <= g1 + tol);
        CHECK(cb.g2_general <= g2 + tol);
        CHECK(cb.g1_regime <= g1 + tol);
        CHECK(cb.g2_regime <= g2 + tol);
      }
}

TEST_CASE("thresholds are monotone in beta_min and gamma") {
  double previous_dense = 1e300;
  double previous_sparse = 1e300;
  for (double beta : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const ProblemParams params = ProblemParams::make(1, 16, 4, beta, 0.4);
    const BoundReport r = full_report(params);
    CHECK(r.dense_threshold <= previous_dense + 1e-9);
    CHECK(*r.sparse_threshold <= previous_sparse + 1e-6);
    previous_dense = r.dense_threshold;
    previous_sparse = *r.sparse_threshold;
  }
  previous_sparse = 1e300;
  for (double gamma : {0.02, 0.05, 0.1, 0.25, 0.5, 1.0}) {
    const ProblemParams params = ProblemParams::make(1, 16, 4, 1.0, gamma);
    const BoundReport r = full_report(params);
    CHECK(*r.sparse_threshold <= previous_sparse + 1e-6);
    previous_sparse = *r.sparse_threshold;
  }
}

TEST_CASE("full report populates the sparse side") {
  const ProblemParams params = ProblemParams::make(1, 12, 3, 1.0, 0.5);
  const BoundReport r = full_report(params);
  REQUIRE(r.g1.has_value());
  REQUIRE(r.g2.has_value());
  REQUIRE(r.entropy_psi1.has_value());
  REQUIRE(r.entropy_psi2.has_value());
  CHECK(*r.sparse_threshold ==
        std::max({*r.g1, *r.g2, r.k_minus_1}));
  CHECK(r.dense_threshold == std::max({r.f1, r.f2, r.k_minus_1}));
  CHECK(*r.entropy_psi1 > oracle::ref::kHalfLn2PiE);
}

TEST_CASE("fano floors") {
  CHECK(std::abs(fano_error_lower_a(20.0, 12, 2, std::sqrt(0.1)) -
                 oracle::ref::kFanoA_20_12_2_b2_01) < 1e-12);
  CHECK(fano_error_lower_a(1e9, 12, 2, 1.0) == 0.0);
  // Zero measurements leave the full prior uncertainty.
  const double b0 = fano_error_lower_b(0.0, 12, 2, 1.0);
  CHECK(std::abs(b0 - (1.0 - 1.0 / std::log(11.0))) < 1e-12);
  // Fano floor vanishes exactly at the f1/f2 crossing points.
  for (int p : {8, 12, 31})
    for (int k = 1; k < p; ++k)
      for (double beta : {0.3, 1.0}) {
        CHECK(std::abs(fano_error_lower_a(f1_bound(p, k, beta), p, k, beta)) <=
              1e-12);
        const double f2 = f2_bound(p, k, beta);
        if (f2 > 0.0)
          CHECK(std::abs(fano_error_lower_b(f2, p, k, beta)) <= 1e-12);
      }
}

TEST_CASE("fano floors stay inside [0, 1]") {
  for (double n : {0.0, 1.0, 7.3, 55.0, 1e4, 1e12})
    for (int k : {1, 2, 5})
      for (double beta : {0.01, 1.0, 100.0}) {
        const double a = fano_error_lower_a(n, 12, k, beta);
        const double b = fano_error_lower_b(n, 12, k, beta);
        CHECK(a >= 0.0);
        CHECK(a <= 1.0);
        CHECK(b >= 0.0);
        CHECK(b <= 1.0);
      }
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(40, 0.25) == Regime::DenseLike);
  CHECK(classify_regime(2, 0.25) == Regime::Degraded);
  CHECK(classify_regime(8, 0.25) == Regime::Transitional);
  CHECK(to_string(Regime::DenseLike) == "DenseLike");
  CHECK(to_string(Regime::Transitional) == "Transitional");
  CHECK(to_string(Regime::Degraded) == "Degraded");
}
