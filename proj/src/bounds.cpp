#include "suprec/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace suprec {

namespace {

void require_nondegenerate(int p, int k, double beta_min, const char* who) {
  if (p < 1 || k < 1 || k > p)
    throw DomainError(std::string(who) + ": need 1 <= k <= p");
  if (k == p)
    throw DomainError(std::string(who) +
                      ": degenerate at k = p (zero-information denominator)");
  if (!(beta_min > 0.0))
    throw DomainError(std::string(who) + ": beta_min must be positive");
}

// The Fano floors stay meaningful at beta_min = 0 (no information per
// measurement); only k = p degenerates the prior-uncertainty denominator.
void require_fano_args(int p, int k, double beta_min, const char* who) {
  if (p < 1 || k < 1 || k >= p)
    throw DomainError(std::string(who) + ": need 1 <= k < p");
  if (!(beta_min >= 0.0))
    throw DomainError(std::string(who) + ": beta_min must be nonnegative");
}

double sparse_denominator(double entropy, const char* who) {
  const double den = entropy - kHalfLog2PiE;
  if (!(den > 0.0))
    throw NumericError(std::string(who) +
                           ": mixture entropy did not exceed the noise floor",
                       den);
  return den;
}

}  // namespace

Regime classify_regime(int k, double gamma) { return classify_gamma_k(k, gamma); }

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::DenseLike: return "DenseLike";
    case Regime::Transitional: return "Transitional";
    case Regime::Degraded: return "Degraded";
  }
  return "?";
}

double gauss_channel_lower(int p, int k, double signal_power) {
  if (!(signal_power > 0.0))
    throw DomainError("gauss_channel_lower: signal power must be positive");
  return log_choose(p, k) / (0.5 * std::log1p(signal_power));
}

double f1_bound(int p, int k, double beta_min) {
  require_nondegenerate(p, k, beta_min, "f1");
  const double b2 = beta_min * beta_min;
  const double den = 0.5 * std::log1p(k * b2 * (1.0 - static_cast<double>(k) / p));
  return (log_choose(p, k) - 1.0) / den;
}

double f2_bound(int p, int k, double beta_min) {
  require_nondegenerate(p, k, beta_min, "f2");
  const double b2 = beta_min * beta_min;
  const int m = p - k + 1;  // candidates in restricted ensemble B
  const double den = 0.5 * std::log1p(b2 * (1.0 - 1.0 / m));
  return (std::log(static_cast<double>(m)) - 1.0) / den;
}

double g1_bound(const ProblemParams& params, double entropy_tol) {
  validate(params);
  require_nondegenerate(params.p, params.k, params.beta_min, "g1");
  const double entropy =
      entropy_numeric(build_psi1(params.k, params.gamma, params.beta_min),
                      entropy_tol);
  return (log_choose(params.p, params.k) - 1.0) /
         sparse_denominator(entropy, "g1");
}

double g2_bound(const ProblemParams& params, double entropy_tol) {
  validate(params);
  require_nondegenerate(params.p, params.k, params.beta_min, "g2");
  const double entropy =
      entropy_numeric(build_psi2(params.gamma, params.beta_min), entropy_tol);
  return (std::log(static_cast<double>(params.p - params.k + 1)) - 1.0) /
         sparse_denominator(entropy, "g2");
}

CorollaryBounds corollary_bounds(const ProblemParams& params) {
  validate(params);
  require_nondegenerate(params.p, params.k, params.beta_min, "corollary");
  const int p = params.p;
  const int k = params.k;
  const double b2 = params.beta_min_sq();
  const double gamma = params.gamma;
  const double num1 = log_choose(p, k) - 1.0;
  const double num2 = std::log(static_cast<double>(p - k + 1)) - 1.0;

  CorollaryBounds out{};
  out.regime = classify_regime(k, gamma);
  out.g1_general = num1 / (0.5 * std::log1p(k * b2));
  out.g2_general = num2 / (0.5 * std::log1p(b2));

  // The g2 denominators of the constant-tau and small-gamma*k cases
  // coincide once tau = gamma*k is substituted.
  const double hb = binary_entropy(gamma);
  out.g2_regime = num2 / (0.5 * gamma * std::log1p(b2 / gamma) + hb);
  if (out.regime == Regime::Degraded) {
    out.g1_regime = num1 / (0.5 * gamma * k * std::log1p(b2 / gamma) + k * hb);
  } else {
    const double tau = gamma * k;
    const double c = 0.5 * std::log(2.0 * 3.141592653589793 * std::exp(1.0) *
                                    (tau + 1.0 / 12.0));
    out.g1_regime = num1 / (0.5 * tau * std::log1p(k * b2 / tau) + c);
  }
  return out;
}

BoundReport dense_threshold(const ProblemParams& params) {
  validate(params);
  BoundReport report;
  report.f1 = f1_bound(params.p, params.k, params.beta_min);
  report.f2 = f2_bound(params.p, params.k, params.beta_min);
  report.k_minus_1 = static_cast<double>(params.k - 1);
  report.dense_threshold = std::max({report.f1, report.f2, report.k_minus_1});
  report.regime = classify_regime(params.k, params.gamma);
  return report;
}

BoundReport full_report(const ProblemParams& params, double entropy_tol) {
  BoundReport report = dense_threshold(params);
  const double h1 =
      entropy_numeric(build_psi1(params.k, params.gamma, params.beta_min),
                      entropy_tol);
  const double h2 =
      entropy_numeric(build_psi2(params.gamma, params.beta_min), entropy_tol);
  report.entropy_psi1 = h1;
  report.entropy_psi2 = h2;
  report.g1 = (log_choose(params.p, params.k) - 1.0) /
              sparse_denominator(h1, "g1");
  report.g2 = (std::log(static_cast<double>(params.p - params.k + 1)) - 1.0) /
              sparse_denominator(h2, "g2");
  report.sparse_threshold = std::max({*report.g1, *report.g2, report.k_minus_1});
  return report;
}

double fano_error_lower_a(double n, int p, int k, double beta_min) {
  require_fano_args(p, k, beta_min, "fano_a");
  const double b2 = beta_min * beta_min;
  const double per_obs =
      0.5 * std::log1p(k * b2 * (1.0 - static_cast<double>(k) / p));
  const double bound = 1.0 - (n * per_obs + 1.0) / log_choose(p, k);
  return std::clamp(bound, 0.0, 1.0);
}

double fano_error_lower_b(double n, int p, int k, double beta_min) {
  require_fano_args(p, k, beta_min, "fano_b");
  const double b2 = beta_min * beta_min;
  const int m = p - k + 1;
  const double per_obs = 0.5 * std::log1p(b2 * (1.0 - 1.0 / m));
  const double bound =
      1.0 - (n * per_obs + 1.0) / std::log(static_cast<double>(m));
  return std::clamp(bound, 0.0, 1.0);
}

double fano_error_lower_a(const ProblemParams& params) {
  validate(params);
  return fano_error_lower_a(params.n, params.p, params.k, params.beta_min);
}

double fano_error_lower_b(const ProblemParams& params) {
  validate(params);
  return fano_error_lower_b(params.n, params.p, params.k, params.beta_min);
}

}  // namespace suprec
