#include "suprec/mixture.hpp"

#include <algorithm>
#include <cmath>

#include "suprec/params.hpp"
#include "suprec/quadrature.hpp"

namespace suprec {

namespace {

constexpr double kTwoPi = 6.283185307179586;

double gaussian_density(double y, double variance) {
  return std::exp(-0.5 * y * y / variance) / std::sqrt(kTwoPi * variance);
}

// ln P(L = l) for L ~ Bin(k, gamma), gamma in (0, 1).
double log_binomial_pmf(int k, int l, double gamma) {
  return log_choose(k, l) + l * std::log(gamma) +
         (k - l) * std::log1p(-gamma);
}

void check_mixture_params(int k, double gamma, double beta_min) {
  if (k < 1) throw DomainError("mixture: k must be positive");
  if (!(gamma > 0.0) || !(gamma <= 1.0))
    throw DomainError("mixture: gamma must lie in (0, 1]");
  if (!(beta_min >= 0.0) || !std::isfinite(beta_min))
    throw DomainError("mixture: beta_min must be finite and nonnegative");
}

}  // namespace

double GaussianMixtureSpec::variance() const {
  double sum = 0.0;
  for (const auto& c : components) sum += c.weight * c.variance;
  return sum;
}

double GaussianMixtureSpec::label_entropy() const {
  double h = 0.0;
  for (const auto& c : components)
    if (c.weight > 0.0) h -= c.weight * std::log(c.weight);
  return h;
}

double GaussianMixtureSpec::max_variance() const {
  double vmax = 0.0;
  for (const auto& c : components) vmax = std::max(vmax, c.variance);
  return vmax;
}

GaussianMixtureSpec GaussianMixtureSpec::single(double variance) {
  if (!(variance > 0.0)) throw DomainError("mixture: variance must be positive");
  GaussianMixtureSpec spec;
  spec.components = {{1.0, variance}};
  spec.label_kind = LabelKind::Degenerate;
  return spec;
}

GaussianMixtureSpec build_psi1(int k, double gamma, double beta_min) {
  check_mixture_params(k, gamma, beta_min);
  GaussianMixtureSpec spec;
  spec.label_kind = LabelKind::Binomial;
  spec.label_k = k;
  spec.label_gamma = gamma;
  const double step = beta_min * beta_min / gamma;
  if (gamma == 1.0) {
    // Deterministic label L = k.
    spec.components = {{1.0, 1.0 + k * step}};
    return spec;
  }
  spec.components.reserve(k + 1);
  for (int l = 0; l <= k; ++l) {
    const double w = std::exp(log_binomial_pmf(k, l, gamma));
    if (w > 0.0) spec.components.push_back({w, 1.0 + l * step});
  }
  return spec;
}

GaussianMixtureSpec build_psi2(double gamma, double beta_min) {
  GaussianMixtureSpec spec = build_psi1(1, gamma, beta_min);
  spec.label_kind = LabelKind::Bernoulli;
  return spec;
}

double mixture_density(const GaussianMixtureSpec& spec, double y) {
  double density = 0.0;
  for (const auto& c : spec.components)
    density += c.weight * gaussian_density(y, c.variance);
  return density;
}

namespace {

// Bound on the entropy mass beyond +-y_max.  With every component variance
// at least v_min, -ln psi(y) <= y^2 / (2 v_min) + M where
// M = -ln(sum_i w_i / sqrt(2 pi v_i)), so per component (z = y_max/sigma_i)
//   int_{y_max}^inf phi_i (y^2/(2 v_min) + M) dy
//     = v_i/(2 v_min) (z phi(z) + Q(z)) + M Q(z).
double tail_entropy_bound(const GaussianMixtureSpec& spec, double y_max) {
  double v_min = spec.components.front().variance;
  double at_zero = 0.0;
  for (const auto& c : spec.components) {
    v_min = std::min(v_min, c.variance);
    at_zero += c.weight / std::sqrt(kTwoPi * c.variance);
  }
  const double m = -std::log(at_zero);
  double bound = 0.0;
  for (const auto& c : spec.components) {
    const double z = y_max / std::sqrt(c.variance);
    const double phi_z = std::exp(-0.5 * z * z) / std::sqrt(kTwoPi);
    const double q_z = 0.5 * std::erfc(z / std::sqrt(2.0));
    bound += c.weight * (c.variance / (2.0 * v_min) * (z * phi_z + q_z) +
                         std::max(m, 0.0) * q_z);
  }
  return 2.0 * bound;  // both tails
}

}  // namespace

double entropy_numeric(const GaussianMixtureSpec& spec, double tol) {
  if (!(tol > 0.0)) throw DomainError("entropy_numeric: tol must be positive");
  const double sigma_max = std::sqrt(spec.max_variance());
  // Push the cutoff out until the widest component's tail mass is below
  // tol/10 and the neglected entropy mass is provably below tol/4.
  double z = 1.0;
  while (0.5 * std::erfc(z / std::sqrt(2.0)) >= 0.1 * tol ||
         tail_entropy_bound(spec, z * sigma_max) >= 0.25 * tol)
    z += 0.25;
  const double y_max = z * sigma_max;

  auto integrand = [&spec](double y) {
    const double d = mixture_density(spec, y);
    return d > 0.0 ? -d * std::log(d) : 0.0;
  };
  // The integrand is even: integrate the positive half and double.
  QuadratureResult q = integrate_adaptive(integrand, 0.0, y_max, 0.25 * tol);
  if (!q.converged)
    throw NumericError("entropy_numeric: quadrature did not converge",
                       2.0 * q.error_estimate);
  return 2.0 * q.value;
}

EntropyBracket entropy_bracket(const GaussianMixtureSpec& spec, double tol) {
  EntropyBracket bracket{};
  double conditional = 0.0;
  for (const auto& c : spec.components)
    conditional += c.weight * 0.5 * std::log(kTwoPi * std::exp(1.0) * c.variance);
  bracket.lower_conditional = conditional;
  bracket.upper_lemma5 = conditional + spec.label_entropy();
  bracket.upper_variance =
      0.5 * std::log(kTwoPi * std::exp(1.0) * spec.variance());
  bracket.numeric = entropy_numeric(spec, tol);
  return bracket;
}

GammaKCase classify_gamma_k(int k, double gamma) {
  const double gk = gamma * k;
  if (gk > 3.0) return GammaKCase::DenseLike;
  if (gk > 1.0) return GammaKCase::Transitional;
  return GammaKCase::Degraded;
}

double expected_half_log_snr(int k, double gamma, double beta_min) {
  check_mixture_params(k, gamma, beta_min);
  const double b2 = beta_min * beta_min;
  if (gamma == 1.0) return 0.5 * std::log1p(k * b2);
  double e = 0.0;
  for (int l = 1; l <= k; ++l)
    e += std::exp(log_binomial_pmf(k, l, gamma)) * 0.5 *
         std::log1p(l * b2 / gamma);
  return e;
}

Lemma6Bounds lemma6_bounds(int k, double gamma, double beta_min) {
  check_mixture_params(k, gamma, beta_min);
  const double b2 = beta_min * beta_min;
  const double gk = gamma * k;
  Lemma6Bounds bounds{};
  bounds.which = classify_gamma_k(k, gamma);
  switch (bounds.which) {
    case GammaKCase::DenseLike:
      bounds.lower = 0.25 * std::log1p(k * b2 / 3.0);
      bounds.upper = 0.5 * std::log1p(k * b2);
      break;
    case GammaKCase::Transitional:
      bounds.lower = 0.5 * (1.0 - std::exp(-gk)) * std::log1p(k * b2 / gk);
      bounds.upper = 0.5 * gk * std::log1p(k * b2 / gk);
      break;
    case GammaKCase::Degraded:
      bounds.lower = 0.25 * gk * std::log1p(b2 / gamma);
      bounds.upper = 0.5 * gk * std::log1p(b2 / gamma);
      break;
  }
  return bounds;
}

double binary_entropy(double gamma) {
  if (!(gamma >= 0.0) || !(gamma <= 1.0))
    throw DomainError("binary_entropy: gamma must lie in [0, 1]");
  if (gamma == 0.0 || gamma == 1.0) return 0.0;
  return -gamma * std::log(gamma) - (1.0 - gamma) * std::log1p(-gamma);
}

double binomial_entropy(int k, double gamma) {
  if (k < 0) throw DomainError("binomial_entropy: k must be nonnegative");
  if (!(gamma >= 0.0) || !(gamma <= 1.0))
    throw DomainError("binomial_entropy: gamma must lie in [0, 1]");
  if (k == 0 || gamma == 0.0 || gamma == 1.0) return 0.0;
  double h = 0.0;
  for (int l = 0; l <= k; ++l) {
    const double lw = log_binomial_pmf(k, l, gamma);
    const double w = std::exp(lw);
    if (w > 0.0) h -= w * lw;
  }
  return h;
}

double binomial_entropy_upper_iid(int k, double gamma) {
  return k * binary_entropy(gamma);
}

double binomial_entropy_upper_gaussian(int k, double gamma) {
  return 0.5 * std::log(kTwoPi * std::exp(1.0) *
                        (k * gamma * (1.0 - gamma) + 1.0 / 12.0));
}

}  // namespace suprec
