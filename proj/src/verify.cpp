#include "suprec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "suprec/bounds.hpp"
#include "suprec/ensemble.hpp"
#include "suprec/mixture.hpp"

namespace suprec {

namespace {

std::string fmt(const char* format, ...) {
  char buf[160];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

void add_check(std::vector<LemmaCheckRow>& rows, std::string scope,
               std::string check, std::string params, double value,
               std::optional<double> lower, std::optional<double> upper) {
  LemmaCheckRow row;
  row.scope = std::move(scope);
  row.check = std::move(check);
  row.params = std::move(params);
  row.value = value;
  row.lower = lower;
  row.upper = upper;
  row.pass = (!lower || value >= *lower) && (!upper || value <= *upper);
  rows.push_back(std::move(row));
}

void covariance_checks(std::vector<LemmaCheckRow>& rows,
                       const std::string& scope, const ProblemParams& params,
                       std::uint64_t samples, std::uint64_t seed, int threads,
                       bool restricted_b) {
  const EnsembleKind kinds[] = {EnsembleKind::StdGaussian,
                                EnsembleKind::Rademacher,
                                EnsembleKind::UniformUnitVar};
  const double raw_predicted =
      1.0 + (restricted_b ? 1 : params.k) * params.beta_min_sq();
  std::vector<double> diag_means;
  for (EnsembleKind kind : kinds) {
    const CovarianceOracleReport report =
        restricted_b ? oracle_lemma2(params, kind, samples, seed, threads)
                     : oracle_lemma1(params, kind, samples, seed, threads);
    const std::string tag =
        fmt("p=%d k=%d beta=%g n=%d ensemble=%s samples=%llu", params.p,
            params.k, params.beta_min, params.n, to_string(kind).c_str(),
            static_cast<unsigned long long>(samples));
    add_check(rows, scope, "diag-reldev", tag, report.max_diag_reldev,
              std::nullopt, 0.05);
    add_check(rows, scope, "offdiag-abs", tag, report.max_offdiag_abs,
              std::nullopt, 0.05);
    add_check(rows, scope, "raw-second-moment", tag,
              report.raw_diag_mean / raw_predicted, 0.95, 1.05);
    double sum = 0.0;
    for (int i = 0; i < report.n; ++i)
      sum += report.empirical[static_cast<std::size_t>(i) * report.n + i];
    diag_means.push_back(sum / report.n);
  }
  // Lemma 1/2 predictions are distribution-free: the three unit-variance
  // ensembles must produce the same covariance.
  for (std::size_t a = 0; a + 1 < diag_means.size(); ++a)
    add_check(rows, scope, "ensemble-agreement",
              fmt("pair=%zu/%zu", a, a + 1),
              std::abs(diag_means[a] - diag_means[a + 1]), std::nullopt, 0.05);
}

void lemma1_checks(std::vector<LemmaCheckRow>& rows, std::uint64_t seed,
                   int threads) {
  covariance_checks(rows, "lemma1", ProblemParams::make(8, 6, 2, 1.0, 1.0),
                    200000, seed, threads, false);
  // beta = 0 degenerates to pure noise with identity covariance.
  const ProblemParams null_params = ProblemParams::make(8, 6, 2, 0.0, 1.0);
  const CovarianceOracleReport report = oracle_lemma1(
      null_params, EnsembleKind::StdGaussian, 100000, seed, threads);
  add_check(rows, "lemma1", "diag-reldev",
            "p=6 k=2 beta=0 n=8 ensemble=std-gaussian samples=100000",
            report.max_diag_reldev, std::nullopt, 0.02);
}

void lemma2_checks(std::vector<LemmaCheckRow>& rows, std::uint64_t seed,
                   int threads) {
  covariance_checks(rows, "lemma2", ProblemParams::make(8, 6, 2, 1.0, 1.0),
                    200000, seed, threads, true);
}

std::vector<double> default_grid() {
  std::vector<double> grid;
  for (int i = -8; i <= 8; ++i) grid.push_back(0.5 * i);
  return grid;
}

void lemma3_checks(std::vector<LemmaCheckRow>& rows, std::uint64_t seed,
                   int threads) {
  const std::vector<double> grid = default_grid();
  for (double gamma : {0.5, 1.0}) {
    const ProblemParams params = ProblemParams::make(1, 6, 2, 1.0, gamma);
    const DensityOracleReport report =
        oracle_lemma3(params, grid, 1000000, seed, threads);
    add_check(rows, "lemma3", "max-density-deviation",
              fmt("p=6 k=2 beta=1 gamma=%g draws=1000000", gamma),
              report.max_abs_deviation, std::nullopt, 0.005);
  }
}

void lemma4_checks(std::vector<LemmaCheckRow>& rows, std::uint64_t seed,
                   int threads) {
  const std::vector<double> grid = default_grid();
  const ProblemParams params = ProblemParams::make(1, 6, 2, 1.0, 0.5);
  const DensityOracleReport report =
      oracle_lemma4(params, grid, 1000000, seed, threads);
  add_check(rows, "lemma4", "max-density-deviation",
            "p=6 k=2 beta=1 gamma=0.5 draws=1000000",
            report.max_abs_deviation, std::nullopt, 0.005);
  // psi2-bar at the origin has a closed form: 0.5/sqrt(6 pi) + 0.5/sqrt(2 pi).
  const std::size_t zero_idx = grid.size() / 2;
  add_check(rows, "lemma4", "value-at-zero",
            "p=6 k=2 beta=1 gamma=0.5 draws=1000000",
            report.mc_average[zero_idx], 0.314635856691161 - 0.005,
            0.314635856691161 + 0.005);
}

void lemma5_checks(std::vector<LemmaCheckRow>& rows) {
  for (int k : {1, 2, 4, 8})
    for (double gamma : {0.05, 0.1, 0.25, 0.5, 1.0})
      for (double beta : {0.25, 1.0, 4.0}) {
        const EntropyBracket bracket =
            entropy_bracket(build_psi1(k, gamma, beta));
        const double upper =
            std::min(bracket.upper_variance, bracket.upper_lemma5);
        add_check(rows, "lemma5", "entropy-sandwich",
                  fmt("k=%d gamma=%g beta=%g", k, gamma, beta),
                  bracket.numeric, bracket.lower_conditional - 1e-8,
                  upper + 1e-6);
      }
}

void lemma6_checks(std::vector<LemmaCheckRow>& rows) {
  for (int k = 1; k <= 30; ++k)
    for (double gamma : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 1.0})
      for (double beta : {0.25, 1.0, 4.0}) {
        const Lemma6Bounds bounds = lemma6_bounds(k, gamma, beta);
        const double exact = expected_half_log_snr(k, gamma, beta);
        add_check(rows, "lemma6", "expectation-sandwich",
                  fmt("k=%d gamma=%g beta=%g case=%s", k, gamma, beta,
                      to_string(bounds.which).c_str()),
                  exact, bounds.lower - 1e-12, bounds.upper + 1e-12);
      }
}

void appendix_e_checks(std::vector<LemmaCheckRow>& rows) {
  for (int k : {1, 2, 3, 5, 8, 13, 21, 34, 55, 100})
    for (double gamma : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 1.0}) {
      const double exact = binomial_entropy(k, gamma);
      const double upper = std::min(binomial_entropy_upper_iid(k, gamma),
                                    binomial_entropy_upper_gaussian(k, gamma));
      add_check(rows, "appendixE", "entropy-upper-bounds",
                fmt("k=%d gamma=%g", k, gamma), exact, std::nullopt,
                upper + 1e-12);
    }
  // k * Hbinary(gamma(k)) with gamma(k) = 1/(k ln k ln ln k) must trend
  // monotonically down toward zero.
  double previous = 0.0;
  bool first = true;
  for (double k : {1e2, 1e3, 1e4, 1e5}) {
    const double gamma = 1.0 / (k * std::log(k) * std::log(std::log(k)));
    const double value = k * binary_entropy(gamma);
    add_check(rows, "appendixE", "vanishing-limit-trend",
              fmt("k=%g gamma=%.6g", k, gamma), value, 0.0,
              first ? std::optional<double>() : previous);
    previous = value;
    first = false;
  }
}

}  // namespace

std::vector<std::string> all_lemma_scopes() {
  return {"lemma1", "lemma2", "lemma3", "lemma4",
          "lemma5", "lemma6", "appendixE"};
}

std::vector<LemmaCheckRow> verify_lemmas(const std::vector<std::string>& scopes,
                                         std::uint64_t seed, int threads) {
  if (scopes.empty()) throw DomainError("verify: empty scope list");
  const std::vector<std::string> known = all_lemma_scopes();
  for (const std::string& scope : scopes)
    if (std::find(known.begin(), known.end(), scope) == known.end())
      throw DomainError("verify: unknown scope '" + scope + "'");
  auto wants = [&scopes](const char* name) {
    return std::find(scopes.begin(), scopes.end(), name) != scopes.end();
  };
  std::vector<LemmaCheckRow> rows;
  if (wants("lemma1")) lemma1_checks(rows, seed, threads);
  if (wants("lemma2")) lemma2_checks(rows, seed, threads);
  if (wants("lemma3")) lemma3_checks(rows, seed, threads);
  if (wants("lemma4")) lemma4_checks(rows, seed, threads);
  if (wants("lemma5")) lemma5_checks(rows);
  if (wants("lemma6")) lemma6_checks(rows);
  if (wants("appendixE")) appendix_e_checks(rows);
  return rows;
}

}  // namespace suprec
