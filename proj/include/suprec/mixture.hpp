#pragma once

#include <vector>

#include "suprec/errors.hpp"

namespace suprec {

// Half of ln(2*pi*e): the differential entropy of a unit-variance Gaussian.
inline constexpr double kHalfLog2PiE = 1.4189385332046727;

enum class LabelKind { Binomial, Bernoulli, Degenerate };

struct MixtureComponent {
  double weight;
  double variance;
};

// Zero-mean Gaussian scale mixture.  Components carry strictly positive
// weights summing to 1; every variance includes the unit noise floor.
struct GaussianMixtureSpec {
  std::vector<MixtureComponent> components;
  LabelKind label_kind = LabelKind::Degenerate;
  int label_k = 0;            // Binomial(k, gamma)
  double label_gamma = 1.0;   // Binomial/Bernoulli parameter

  // Second moment of the mixture (it is zero-mean): sum w_i * var_i.
  double variance() const;
  // Entropy of the component label, -sum w_i ln w_i.
  double label_entropy() const;
  double max_variance() const;

  static GaussianMixtureSpec single(double variance);
};

// Mixture with component variances 1 + l*beta_min^2/gamma and Binomial(k,
// gamma) weights.  Zero-weight components (gamma = 1) are dropped.
GaussianMixtureSpec build_psi1(int k, double gamma, double beta_min);

// Two-component mixture with Bernoulli(gamma) weights; equals
// build_psi1(1, gamma, beta_min).
GaussianMixtureSpec build_psi2(double gamma, double beta_min);

// Pointwise density sum w_i * phi(y; 0, var_i).  Strictly positive, even.
double mixture_density(const GaussianMixtureSpec& spec, double y);

// Differential entropy -int psi ln psi dy (nats) via adaptive quadrature on
// [0, y_max] doubled by symmetry, with y_max placed where the tail mass of
// the widest component drops below tol/10.  Throws NumericError (carrying
// the achieved error estimate) when the subdivision budget is exhausted.
double entropy_numeric(const GaussianMixtureSpec& spec, double tol = 1e-8);

// Numeric entropy together with its analytic brackets:
//   lower_conditional = E_label[ 1/2 ln(2 pi e var(label)) ]
//   upper_lemma5      = lower_conditional + H(label)
//   upper_variance    = 1/2 ln(2 pi e Var(mixture))
struct EntropyBracket {
  double numeric;
  double upper_variance;
  double upper_lemma5;
  double lower_conditional;
};

EntropyBracket entropy_bracket(const GaussianMixtureSpec& spec,
                               double tol = 1e-8);

// Case split on gamma*k shared by the Lemma-6 brackets, the corollary
// bounds and the regime classifier: a/DenseLike (gk > 3),
// b/Transitional (1 < gk <= 3), c/Degraded (gk <= 1).
enum class GammaKCase { DenseLike, Transitional, Degraded };

GammaKCase classify_gamma_k(int k, double gamma);

// E = E_L[ 1/2 ln(1 + L beta_min^2 / gamma) ], exact pmf summation.
double expected_half_log_snr(int k, double gamma, double beta_min);

// Case-matched analytic bracket for expected_half_log_snr.
struct Lemma6Bounds {
  double lower;
  double upper;
  GammaKCase which;
};

Lemma6Bounds lemma6_bounds(int k, double gamma, double beta_min);

// Entropy of a Ber(gamma) variate in nats, with 0 ln 0 = 0.
double binary_entropy(double gamma);

// Exact entropy of Bin(k, gamma) by direct pmf summation (log-space pmf,
// valid through k = 1e4 with extreme gamma).
double binomial_entropy(int k, double gamma);

// H(L) <= k * Hbinary(gamma).
double binomial_entropy_upper_iid(int k, double gamma);

// H(L) <= 1/2 ln(2 pi e (k gamma (1-gamma) + 1/12)).
double binomial_entropy_upper_gaussian(int k, double gamma);

}  // namespace suprec
