#pragma once

#include <optional>
#include <string>

#include "suprec/mixture.hpp"
#include "suprec/params.hpp"

namespace suprec {

// Regime of the sparsified-ensemble bounds, keyed by gamma*k.
using Regime = GammaKCase;

Regime classify_regime(int k, double gamma);
std::string to_string(Regime regime);

// Channel-coding lower bound ln C(p,k) / (1/2 ln(1 + signal_power)).
double gauss_channel_lower(int p, int k, double signal_power);

// Dense-ensemble necessary conditions.  Both require 1 <= k < p and
// beta_min > 0 (at k = p the denominators degenerate).
double f1_bound(int p, int k, double beta_min);
double f2_bound(int p, int k, double beta_min);

// Sparsified-ensemble necessary conditions, with the mixture entropies
// computed by quadrature at absolute tolerance entropy_tol.
double g1_bound(const ProblemParams& params, double entropy_tol = 1e-8);
double g2_bound(const ProblemParams& params, double entropy_tol = 1e-8);

// Closed-form lower bounds on g1/g2.  The general pair is always valid;
// the regime pair uses the case matched to gamma*k (constant-tau form for
// gamma*k > 1, small-gamma*k form otherwise).
struct CorollaryBounds {
  double g1_general;
  double g2_general;
  double g1_regime;
  double g2_regime;
  Regime regime;
};

CorollaryBounds corollary_bounds(const ProblemParams& params);

struct BoundReport {
  double f1 = 0.0;
  double f2 = 0.0;
  double k_minus_1 = 0.0;
  double dense_threshold = 0.0;
  std::optional<double> g1;
  std::optional<double> g2;
  std::optional<double> sparse_threshold;
  std::optional<double> entropy_psi1;
  std::optional<double> entropy_psi2;
  Regime regime = Regime::DenseLike;
};

// Dense fields only; the sparse optionals stay empty.
BoundReport dense_threshold(const ProblemParams& params);

// Dense and sparse fields, entropies included.
BoundReport full_report(const ProblemParams& params, double entropy_tol = 1e-8);

// Fano floors on the average error of any decoder over the restricted
// ensembles, clamped to [0, 1].  The real-valued n overloads exist because
// the bounds are algebraic identities in n (they vanish exactly at the
// f1/f2 crossing points).
double fano_error_lower_a(double n, int p, int k, double beta_min);
double fano_error_lower_b(double n, int p, int k, double beta_min);
double fano_error_lower_a(const ProblemParams& params);
double fano_error_lower_b(const ProblemParams& params);

}  // namespace suprec
