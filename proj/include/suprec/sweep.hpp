#pragma once

#include <string>
#include <utility>
#include <vector>

#include "suprec/bounds.hpp"
#include "suprec/params.hpp"

namespace suprec {

enum class SweepVariable { Gamma, N, P, BetaMin };

SweepVariable parse_sweep_variable(const std::string& name);
std::string to_string(SweepVariable variable);

// Values either given explicitly or generated from (start, stop, count)
// with linear or log spacing.
std::vector<double> spaced_values(double start, double stop, int count,
                                  bool log_spacing);

struct SweepSpec {
  SweepVariable variable = SweepVariable::Gamma;
  std::vector<double> values;
  ProblemParams base;  // fixed fields; the swept one is overwritten
};

struct SweepRow {
  ProblemParams params;
  BoundReport report;
  CorollaryBounds corollary;
  double rate_at_threshold = 0.0;  // ln C(p,k) / sparse_threshold
};

// Evaluates the full bound report at every sweep value, in input order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                double entropy_tol = 1e-8);

struct SlopeFitReport {
  std::string x_label;
  std::string y_label;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;  // (x, y), pre-log
};

// Least-squares fit of ln(y) against ln(x); slope near 1 means y grows
// like x.  Requires at least 4 strictly positive points.
SlopeFitReport fit_loglog(const std::vector<std::pair<double, double>>& points,
                          std::string x_label, std::string y_label);

// Families for the desk-scale growth-law checks.  Each maps a list of
// signal dimensions to (predicted growth, evaluated threshold) pairs under
// the family's scaling rule.
enum class SlopeFamily {
  // k = 4 fixed, beta_min^2 = 1/k: f2 against k ln(p-k).
  DenseF2FixedK,
  // k = ceil(p/4), beta_min^2 = 1/k: f1 against p ln p.
  DenseF1LinearK,
  // k = 4 fixed, beta_min^2 = 1/k, gamma = 1/(k ln k): case-matched
  // corollary bound max(g1_lower, g2_lower, k-1) against
  // k ln(p-k) / (gamma k ln(1/gamma)).
  SparseCorollaryGammaDecay,
};

SlopeFamily parse_slope_family(const std::string& name);
std::string to_string(SlopeFamily family);

SlopeFitReport slope_fit_family(SlopeFamily family,
                                const std::vector<int>& p_values);

}  // namespace suprec
