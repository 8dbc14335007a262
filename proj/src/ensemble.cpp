#include "suprec/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "suprec/mixture.hpp"

namespace suprec {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kTwoPi = 6.283185307179586;

// Fixed chunk sizes keep parallel reductions independent of thread count:
// partial results are produced per chunk and folded in chunk order.
constexpr std::uint64_t kTrialChunk = 1024;
constexpr std::uint64_t kSampleChunk = 4096;

void parallel_chunks(
    std::uint64_t items, std::uint64_t chunk_size, int threads,
    const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
  const std::size_t chunks =
      static_cast<std::size_t>((items + chunk_size - 1) / chunk_size);
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int>(hw) : 1;
  }
  threads = std::min<std::size_t>(threads, chunks);
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      fn(c, c * chunk_size, std::min(items, (c + 1) * chunk_size));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      fn(c, c * chunk_size, std::min(items, (c + 1) * chunk_size));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

double draw_entry(EnsembleKind kind, double gamma, Philox& rng) {
  switch (kind) {
    case EnsembleKind::StdGaussian:
      return rng.next_gaussian();
    case EnsembleKind::Rademacher:
      return (rng.next_u32() & 1u) ? 1.0 : -1.0;
    case EnsembleKind::UniformUnitVar:
      return kSqrt3 * (2.0 * rng.next_unit() - 1.0);
    case EnsembleKind::SparsifiedGaussian:
      if (rng.next_unit() < gamma)
        return rng.next_gaussian() / std::sqrt(gamma);
      return 0.0;
  }
  throw DomainError("unknown ensemble kind");
}

double subset_residual(const MeasurementMatrix& x,
                       const std::vector<double>& y,
                       const std::vector<int>& subset, double beta_min) {
  double r = 0.0;
  for (int i = 0; i < x.rows; ++i) {
    double fit = 0.0;
    for (int j : subset) fit += x(i, j);
    const double d = y[i] - beta_min * fit;
    r += d * d;
  }
  return r;
}

}  // namespace

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::StdGaussian: return "std-gaussian";
    case EnsembleKind::Rademacher: return "rademacher";
    case EnsembleKind::UniformUnitVar: return "uniform";
    case EnsembleKind::SparsifiedGaussian: return "sparsified";
  }
  return "?";
}

MeasurementMatrix sample_matrix(int n, int p, EnsembleKind kind, double gamma,
                                std::uint64_t seed, std::uint64_t trial) {
  if (n < 1 || p < 1) throw DomainError("sample_matrix: need n, p >= 1");
  if (kind == EnsembleKind::SparsifiedGaussian &&
      (!(gamma > 0.0) || !(gamma <= 1.0)))
    throw DomainError("sample_matrix: gamma must lie in (0, 1]");
  MeasurementMatrix x;
  x.rows = n;
  x.cols = p;
  x.ensemble = kind;
  x.gamma = gamma;
  x.seed = seed;
  x.data.resize(static_cast<std::size_t>(n) * p);
  Philox rng = substream(seed, trial, StreamPurpose::Matrix);
  for (double& entry : x.data) entry = draw_entry(kind, gamma, rng);
  return x;
}

ObservationVector observe_a(const MeasurementMatrix& x,
                            const SupportSet& support, double beta_min,
                            bool noise, Philox& noise_rng) {
  if (!support.indices.empty() && support.indices.back() >= x.cols)
    throw DomainError("observe_a: support index out of range");
  ObservationVector obs;
  obs.noise_realized = noise;
  obs.values.resize(x.rows);
  for (int i = 0; i < x.rows; ++i) {
    double sum = 0.0;
    for (int j : support.indices) sum += x(i, j);
    obs.values[i] = beta_min * sum + (noise ? noise_rng.next_gaussian() : 0.0);
  }
  return obs;
}

ObservationVector observe_a(const MeasurementMatrix& x,
                            const SupportSet& support, double beta_min,
                            bool noise, std::uint64_t seed) {
  Philox rng = substream(seed, 0, StreamPurpose::Noise);
  return observe_a(x, support, beta_min, noise, rng);
}

ObservationVector observe_b(const MeasurementMatrix& x, int j_star,
                            double beta_min, bool noise, Philox& noise_rng) {
  if (j_star < 0 || j_star >= x.cols)
    throw DomainError("observe_b: j_star out of range");
  ObservationVector obs;
  obs.noise_realized = noise;
  obs.values.resize(x.rows);
  for (int i = 0; i < x.rows; ++i)
    obs.values[i] =
        beta_min * x(i, j_star) + (noise ? noise_rng.next_gaussian() : 0.0);
  return obs;
}

ObservationVector observe_b(const MeasurementMatrix& x, int j_star,
                            double beta_min, bool noise, std::uint64_t seed) {
  Philox rng = substream(seed, 0, StreamPurpose::Noise);
  return observe_b(x, j_star, beta_min, noise, rng);
}

SupportSet ml_decode_a(const MeasurementMatrix& x,
                       const std::vector<double>& y, int k, double beta_min,
                       std::uint64_t cap) {
  if (static_cast<int>(y.size()) != x.rows)
    throw DomainError("ml_decode_a: observation length mismatch");
  std::vector<int> best;
  double best_residual = 0.0;
  bool first = true;
  // Enumeration is lexicographic and only a strict improvement replaces
  // the incumbent, so ties resolve to the lexicographically smallest set.
  for_each_support(
      x.cols, k,
      [&](const std::vector<int>& subset) {
        const double r = subset_residual(x, y, subset, beta_min);
        if (first || r < best_residual) {
          first = false;
          best_residual = r;
          best = subset;
        }
      },
      cap);
  return SupportSet{std::move(best)};
}

int ml_decode_b(const MeasurementMatrix& x, const std::vector<double>& y,
                double beta_min) {
  if (static_cast<int>(y.size()) != x.rows)
    throw DomainError("ml_decode_b: observation length mismatch");
  if (x.cols < 1) throw DomainError("ml_decode_b: no candidate columns");
  int best = 0;
  double best_residual = 0.0;
  for (int j = 0; j < x.cols; ++j) {
    double r = 0.0;
    for (int i = 0; i < x.rows; ++i) {
      const double d = y[i] - beta_min * x(i, j);
      r += d * d;
    }
    if (j == 0 || r < best_residual) {
      best_residual = r;
      best = j;
    }
  }
  return best;
}

SupportSet sample_support(int p, int k, Philox& rng) {
  if (k < 0 || k > p) throw DomainError("sample_support: invalid (p, k)");
  std::vector<int> chosen;
  chosen.reserve(k);
  auto contains = [&chosen](int v) {
    return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
  };
  for (int j = p - k; j < p; ++j) {
    const int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(j) + 1));
    chosen.push_back(contains(t) ? j : t);
  }
  std::sort(chosen.begin(), chosen.end());
  return SupportSet{std::move(chosen)};
}

WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials,
                               double z) {
  if (trials == 0) throw DomainError("wilson_interval: trials must be >= 1");
  const double n = static_cast<double>(trials);
  const double p_hat = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p_hat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / denom;
  // Clamp away rounding so that ci_low <= p_hat <= ci_high holds exactly.
  return {std::clamp(center - half, 0.0, p_hat),
          std::clamp(center + half, p_hat, 1.0)};
}

MonteCarloResult monte_carlo_error(const ProblemParams& params,
                                   EnsembleKind kind, RestrictedEnsemble which,
                                   std::uint64_t trials, std::uint64_t seed,
                                   int threads, std::uint64_t cap) {
  validate(params);
  if (trials < 1) throw DomainError("monte_carlo_error: trials must be >= 1");
  if (which == RestrictedEnsemble::A &&
      !binomial_count_within(params.p, params.k, cap))
    throw CapacityError("monte_carlo_error: C(p,k) exceeds the enumeration cap");

  const int cols = which == RestrictedEnsemble::A
                       ? params.p
                       : params.p - params.k + 1;
  std::vector<std::uint8_t> error_flags(trials, 0);
  parallel_chunks(trials, kTrialChunk, threads,
                  [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t t = begin; t < end; ++t) {
                      const MeasurementMatrix x = sample_matrix(
                          params.n, cols, kind, params.gamma, seed, t);
                      Philox pick = substream(seed, t, StreamPurpose::Support);
                      Philox noise = substream(seed, t, StreamPurpose::Noise);
                      if (which == RestrictedEnsemble::A) {
                        const SupportSet truth =
                            sample_support(params.p, params.k, pick);
                        const ObservationVector y = observe_a(
                            x, truth, params.beta_min, true, noise);
                        const SupportSet decoded = ml_decode_a(
                            x, y.values, params.k, params.beta_min, cap);
                        error_flags[t] = decoded == truth ? 0 : 1;
                      } else {
                        const int truth = static_cast<int>(
                            pick.next_below(static_cast<std::uint64_t>(cols)));
                        const ObservationVector y = observe_b(
                            x, truth, params.beta_min, true, noise);
                        const int decoded =
                            ml_decode_b(x, y.values, params.beta_min);
                        error_flags[t] = decoded == truth ? 0 : 1;
                      }
                    }
                  });

  MonteCarloResult result;
  result.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) result.errors += error_flags[t];
  result.p_hat = static_cast<double>(result.errors) / static_cast<double>(trials);
  const WilsonInterval ci = wilson_interval(result.errors, trials);
  result.ci_low = ci.low;
  result.ci_high = ci.high;
  result.seed = seed;
  result.ensemble = kind;
  return result;
}

namespace {

// Shared core of the two covariance oracles.  `candidates` is p for
// ensemble A and p-k+1 for ensemble B; `signal_cols` is k or 1.
CovarianceOracleReport covariance_oracle(const ProblemParams& params,
                                         EnsembleKind kind, int candidates,
                                         int signal_cols, double predicted,
                                         std::uint64_t samples,
                                         std::uint64_t seed, int threads) {
  validate(params);
  if (samples < 1) throw DomainError("covariance oracle: samples must be >= 1");
  const int n = params.n;
  const double beta = params.beta_min;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const std::size_t chunks =
      static_cast<std::size_t>((samples + kSampleChunk - 1) / kSampleChunk);
  // Per-chunk partial sums of Y Y^T and mu mu^T, folded in chunk order.
  std::vector<std::vector<double>> second_partial(chunks),
      mean_partial(chunks);

  parallel_chunks(
      samples, kSampleChunk, threads,
      [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<double>& second = second_partial[chunk];
        std::vector<double>& mean_outer = mean_partial[chunk];
        second.assign(nn, 0.0);
        mean_outer.assign(nn, 0.0);
        std::vector<double> y(n), mu(n);
        for (std::uint64_t s = begin; s < end; ++s) {
          const MeasurementMatrix x =
              sample_matrix(n, candidates, kind, params.gamma, seed, s);
          Philox pick = substream(seed, s, StreamPurpose::Support);
          Philox noise = substream(seed, s, StreamPurpose::Noise);
          ObservationVector obs;
          if (signal_cols == 1) {
            const int j = static_cast<int>(
                pick.next_below(static_cast<std::uint64_t>(candidates)));
            obs = observe_b(x, j, beta, true, noise);
          } else {
            const SupportSet truth = sample_support(candidates, signal_cols, pick);
            obs = observe_a(x, truth, beta, true, noise);
          }
          y = obs.values;
          // Mixture mean of Y given X: every column enters a uniformly
          // random support with probability signal_cols / candidates.
          const double inclusion =
              static_cast<double>(signal_cols) / candidates;
          for (int i = 0; i < n; ++i) {
            double row_sum = 0.0;
            for (int j = 0; j < candidates; ++j) row_sum += x(i, j);
            mu[i] = beta * inclusion * row_sum;
          }
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              second[static_cast<std::size_t>(i) * n + j] += y[i] * y[j];
              mean_outer[static_cast<std::size_t>(i) * n + j] += mu[i] * mu[j];
            }
        }
      });

  std::vector<double> second(nn, 0.0), mean_outer(nn, 0.0);
  for (std::size_t c = 0; c < chunks; ++c)
    for (std::size_t e = 0; e < nn; ++e) {
      second[e] += second_partial[c][e];
      mean_outer[e] += mean_partial[c][e];
    }

  CovarianceOracleReport report;
  report.n = n;
  report.empirical.resize(nn);
  report.predicted_diag = predicted;
  const double inv = 1.0 / static_cast<double>(samples);
  double raw_diag = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t e = static_cast<std::size_t>(i) * n + j;
      report.empirical[e] = (second[e] - mean_outer[e]) * inv;
      if (i == j) {
        raw_diag += second[e] * inv;
        report.max_diag_reldev =
            std::max(report.max_diag_reldev,
                     std::abs(report.empirical[e] - predicted) / predicted);
      } else {
        report.max_offdiag_abs =
            std::max(report.max_offdiag_abs, std::abs(report.empirical[e]));
      }
    }
  report.raw_diag_mean = raw_diag / n;
  return report;
}

}  // namespace

CovarianceOracleReport oracle_lemma1(const ProblemParams& params,
                                     EnsembleKind kind, std::uint64_t samples,
                                     std::uint64_t seed, int threads) {
  const double b2 = params.beta_min_sq();
  const double predicted =
      1.0 + params.k * b2 * (1.0 - static_cast<double>(params.k) / params.p);
  return covariance_oracle(params, kind, params.p, params.k, predicted,
                           samples, seed, threads);
}

CovarianceOracleReport oracle_lemma2(const ProblemParams& params,
                                     EnsembleKind kind, std::uint64_t samples,
                                     std::uint64_t seed, int threads) {
  const int m = params.p - params.k + 1;
  const double predicted = 1.0 + params.beta_min_sq() * (1.0 - 1.0 / m);
  return covariance_oracle(params, kind, m, 1, predicted, samples, seed,
                           threads);
}

namespace {

DensityOracleReport density_oracle(const ProblemParams& params, int candidates,
                                   int subset_size,
                                   const GaussianMixtureSpec& reference_mix,
                                   const std::vector<double>& y_grid,
                                   std::uint64_t samples, std::uint64_t seed,
                                   int threads) {
  validate(params);
  if (samples < 1) throw DomainError("density oracle: samples must be >= 1");
  if (y_grid.empty()) throw DomainError("density oracle: empty grid");
  const auto n_subsets = binomial_count_within(candidates, subset_size, 100000);
  if (!n_subsets)
    throw CapacityError("density oracle: too many subsets per draw");
  const double beta = params.beta_min;
  const std::size_t g = y_grid.size();
  const std::size_t chunks =
      static_cast<std::size_t>((samples + kSampleChunk - 1) / kSampleChunk);
  std::vector<std::vector<double>> partial(chunks);

  parallel_chunks(
      samples, kSampleChunk, threads,
      [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<double>& acc = partial[chunk];
        acc.assign(g, 0.0);
        std::vector<double> row(candidates);
        std::vector<double> subset_sums;
        subset_sums.reserve(static_cast<std::size_t>(*n_subsets));
        for (std::uint64_t s = begin; s < end; ++s) {
          // Only one row of the matrix matters for the pointwise average.
          Philox rng = substream(seed, s, StreamPurpose::Sample);
          for (int j = 0; j < candidates; ++j)
            row[j] = draw_entry(EnsembleKind::SparsifiedGaussian, params.gamma,
                                rng);
          subset_sums.clear();
          for_each_support(candidates, subset_size,
                           [&](const std::vector<int>& subset) {
                             double sum = 0.0;
                             for (int j : subset) sum += row[j];
                             subset_sums.push_back(sum);
                           });
          const double norm = 1.0 / (std::sqrt(kTwoPi) * subset_sums.size());
          for (std::size_t yi = 0; yi < g; ++yi) {
            double density = 0.0;
            for (const double sum : subset_sums) {
              const double d = y_grid[yi] - beta * sum;
              density += std::exp(-0.5 * d * d);
            }
            acc[yi] += density * norm;
          }
        }
      });

  DensityOracleReport report;
  report.grid = y_grid;
  report.mc_average.assign(g, 0.0);
  report.reference.resize(g);
  for (std::size_t c = 0; c < chunks; ++c)
    for (std::size_t yi = 0; yi < g; ++yi)
      report.mc_average[yi] += partial[c][yi];
  const double inv = 1.0 / static_cast<double>(samples);
  for (std::size_t yi = 0; yi < g; ++yi) {
    report.mc_average[yi] *= inv;
    report.reference[yi] = mixture_density(reference_mix, y_grid[yi]);
    report.max_abs_deviation =
        std::max(report.max_abs_deviation,
                 std::abs(report.mc_average[yi] - report.reference[yi]));
  }
  return report;
}

}  // namespace

DensityOracleReport oracle_lemma3(const ProblemParams& params,
                                  const std::vector<double>& y_grid,
                                  std::uint64_t samples, std::uint64_t seed,
                                  int threads) {
  return density_oracle(params, params.p, params.k,
                        build_psi1(params.k, params.gamma, params.beta_min),
                        y_grid, samples, seed, threads);
}

DensityOracleReport oracle_lemma4(const ProblemParams& params,
                                  const std::vector<double>& y_grid,
                                  std::uint64_t samples, std::uint64_t seed,
                                  int threads) {
  return density_oracle(params, params.p - params.k + 1, 1,
                        build_psi2(params.gamma, params.beta_min), y_grid,
                        samples, seed, threads);
}

}  // namespace suprec
