#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "suprec/sweep.hpp"

using namespace suprec;

TEST_CASE("spaced values") {
  const auto lin = spaced_values(0.0, 1.0, 5, false);
  REQUIRE(lin.size() == 5);
  CHECK(lin[0] == 0.0);
  CHECK(lin[2] == doctest::Approx(0.5));
  CHECK(lin[4] == 1.0);
  const auto lg = spaced_values(1e-3, 1.0, 4, true);
  REQUIRE(lg.size() == 4);
  CHECK(lg[0] == doctest::Approx(1e-3));
  CHECK(lg[1] == doctest::Approx(1e-2));
  CHECK(lg[3] == doctest::Approx(1.0));
  CHECK_THROWS_AS(spaced_values(0.0, 1.0, 4, true), DomainError);
  CHECK_THROWS_AS(spaced_values(1.0, 2.0, 0, false), DomainError);
}

TEST_CASE("sweep variable parsing") {
  CHECK(parse_sweep_variable("gamma") == SweepVariable::Gamma);
  CHECK(parse_sweep_variable("beta-min") == SweepVariable::BetaMin);
  CHECK(parse_sweep_variable("n") == SweepVariable::N);
  CHECK(parse_sweep_variable("p") == SweepVariable::P);
  CHECK_THROWS_AS(parse_sweep_variable("sigma"), DomainError);
}

TEST_CASE("n sweep leaves bounds constant") {
  SweepSpec spec;
  spec.variable = SweepVariable::N;
  spec.values = {5, 10, 20, 40};
  spec.base = ProblemParams::make(1, 12, 3, 1.0, 0.5);
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 4);
  for (const SweepRow& row : rows) {
    CHECK(row.report.dense_threshold == rows[0].report.dense_threshold);
    CHECK(*row.report.sparse_threshold == *rows[0].report.sparse_threshold);
    CHECK(row.rate_at_threshold == rows[0].rate_at_threshold);
  }
}

TEST_CASE("gamma sweep rate is nondecreasing") {
  SweepSpec spec;
  spec.variable = SweepVariable::Gamma;
  spec.values = spaced_values(0.01, 1.0, 9, true);
  spec.base = ProblemParams::make(1, 16, 4, 1.0, 1.0);
  const auto rows = run_sweep(spec);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].rate_at_threshold >= rows[i - 1].rate_at_threshold - 1e-6);
}

TEST_CASE("empty sweep is a usage error") {
  SweepSpec spec;
  spec.variable = SweepVariable::Gamma;
  spec.base = ProblemParams::make(1, 8, 2, 1.0, 1.0);
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
}

TEST_CASE("loglog fit recovers an exact power law") {
  std::vector<std::pair<double, double>> points;
  for (double x : {1.0, 2.0, 5.0, 11.0, 31.0})
    points.emplace_back(x, 3.0 * std::pow(x, 1.7));
  const SlopeFitReport fit = fit_loglog(points, "x", "y");
  CHECK(fit.slope == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.points.size() == 5);

  CHECK_THROWS_AS(fit_loglog({{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}}, "x", "y"),
                  DomainError);
  CHECK_THROWS_AS(
      fit_loglog({{1.0, 1.0}, {2.0, -2.0}, {3.0, 3.0}, {4.0, 4.0}}, "x", "y"),
      DomainError);
}

TEST_CASE("slope families reproduce their frozen fits") {
  const std::vector<int> ps = {64, 128, 256, 512, 1024, 2048, 4096};
  const SlopeFitReport f1 = slope_fit_family(SlopeFamily::DenseF2FixedK, ps);
  CHECK(f1.slope == doctest::Approx(1.18599531295387).epsilon(1e-9));
  CHECK(f1.r_squared == doctest::Approx(0.99984106105492).epsilon(1e-9));
  const SlopeFitReport f2 = slope_fit_family(SlopeFamily::DenseF1LinearK, ps);
  CHECK(f2.slope == doctest::Approx(0.874960865612203).epsilon(1e-9));
  CHECK(f2.r_squared == doctest::Approx(0.999972878371676).epsilon(1e-9));
  const SlopeFitReport f3 =
      slope_fit_family(SlopeFamily::SparseCorollaryGammaDecay, ps);
  CHECK(f3.slope == doctest::Approx(1.20524194549096).epsilon(1e-9));
  CHECK(f3.r_squared == doctest::Approx(0.999633443279618).epsilon(1e-9));

  CHECK_THROWS_AS(slope_fit_family(SlopeFamily::DenseF2FixedK, {64, 128, 256}),
                  DomainError);
}

TEST_CASE("slope family parsing round-trips") {
  for (SlopeFamily family :
       {SlopeFamily::DenseF2FixedK, SlopeFamily::DenseF1LinearK,
        SlopeFamily::SparseCorollaryGammaDecay})
    CHECK(parse_slope_family(to_string(family)) == family);
  CHECK_THROWS_AS(parse_slope_family("bogus"), DomainError);
}
