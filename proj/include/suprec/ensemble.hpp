#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "suprec/params.hpp"
#include "suprec/rng.hpp"

namespace suprec {

enum class EnsembleKind {
  StdGaussian,
  Rademacher,
  UniformUnitVar,
  SparsifiedGaussian,
};

std::string to_string(EnsembleKind kind);

// Dense n x p realization from a named ensemble.  Every ensemble has
// entrywise mean 0 and variance 1; SparsifiedGaussian entries are 0 with
// probability 1-gamma and N(0, 1/gamma) otherwise.
struct MeasurementMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // row-major
  EnsembleKind ensemble = EnsembleKind::StdGaussian;
  double gamma = 1.0;
  std::uint64_t seed = 0;

  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  double& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
};

// Deterministic given (dims, kind, gamma, seed, trial); entries are drawn
// i.i.d. from substream(seed, trial, Matrix).
MeasurementMatrix sample_matrix(int n, int p, EnsembleKind kind, double gamma,
                                std::uint64_t seed, std::uint64_t trial = 0);

// Restricted ensemble A observation Y = beta_min * sum_{j in S} X_j + W.
ObservationVector observe_a(const MeasurementMatrix& x,
                            const SupportSet& support, double beta_min,
                            bool noise, Philox& noise_rng);
ObservationVector observe_a(const MeasurementMatrix& x,
                            const SupportSet& support, double beta_min,
                            bool noise, std::uint64_t seed);

// Restricted ensemble B observation Ytilde = beta_min * X_{j*} + W.  The
// matrix passed here is the reduced problem's n x (p-k+1) matrix; j_star
// indexes its columns.
ObservationVector observe_b(const MeasurementMatrix& x, int j_star,
                            double beta_min, bool noise, Philox& noise_rng);
ObservationVector observe_b(const MeasurementMatrix& x, int j_star,
                            double beta_min, bool noise, std::uint64_t seed);

// Exhaustive minimum-distance decoders.  Ties break toward the
// lexicographically smallest candidate, which makes the output
// deterministic even when sparsified matrices produce exact ties.
SupportSet ml_decode_a(const MeasurementMatrix& x,
                       const std::vector<double>& y, int k, double beta_min,
                       std::uint64_t cap = kDefaultEnumerationCap);
int ml_decode_b(const MeasurementMatrix& x, const std::vector<double>& y,
                double beta_min);

// Uniformly random k-subset of {0..p-1} (Floyd's algorithm).
SupportSet sample_support(int p, int k, Philox& rng);

enum class RestrictedEnsemble { A, B };

struct WilsonInterval {
  double low;
  double high;
};

// Wilson score interval for a binomial proportion (default 95%).
WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials,
                               double z = 1.959963984540054);

struct MonteCarloResult {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
  EnsembleKind ensemble = EnsembleKind::StdGaussian;
};

// Empirical decoding error of the exhaustive decoder on the chosen
// restricted ensemble.  Each trial draws a fresh matrix, a uniform support
// (A) or uniform j* (B), and fresh noise from counter-based substreams
// keyed by (seed, trial), so the result is bitwise identical for a fixed
// seed regardless of the number of worker threads.
MonteCarloResult monte_carlo_error(const ProblemParams& params,
                                   EnsembleKind kind, RestrictedEnsemble which,
                                   std::uint64_t trials, std::uint64_t seed,
                                   int threads = 0,
                                   std::uint64_t cap = kDefaultEnumerationCap);

// Monte Carlo estimate of the averaged observation covariance
// E[Y Y^T] - mu mu^T against the scalar-times-identity prediction.
struct CovarianceOracleReport {
  int n = 0;
  std::vector<double> empirical;  // n x n, row-major
  double predicted_diag = 0.0;
  double max_offdiag_abs = 0.0;
  double max_diag_reldev = 0.0;
  // Mean diagonal of the raw second moment E[Y Y^T]; distinguishes the
  // uncentered value 1 + k beta^2 from the centered prediction.
  double raw_diag_mean = 0.0;
};

CovarianceOracleReport oracle_lemma1(const ProblemParams& params,
                                     EnsembleKind kind, std::uint64_t samples,
                                     std::uint64_t seed, int threads = 0);
CovarianceOracleReport oracle_lemma2(const ProblemParams& params,
                                     EnsembleKind kind, std::uint64_t samples,
                                     std::uint64_t seed, int threads = 0);

// Monte Carlo average of the conditional observation density over matrix
// draws, compared pointwise to the predicted Gaussian mixture.
struct DensityOracleReport {
  std::vector<double> grid;
  std::vector<double> mc_average;
  std::vector<double> reference;
  double max_abs_deviation = 0.0;
};

DensityOracleReport oracle_lemma3(const ProblemParams& params,
                                  const std::vector<double>& y_grid,
                                  std::uint64_t samples, std::uint64_t seed,
                                  int threads = 0);
DensityOracleReport oracle_lemma4(const ProblemParams& params,
                                  const std::vector<double>& y_grid,
                                  std::uint64_t samples, std::uint64_t seed,
                                  int threads = 0);

}  // namespace suprec
