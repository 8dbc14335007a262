#include "suprec/sweep.hpp"

#include <cmath>

namespace suprec {

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "gamma") return SweepVariable::Gamma;
  if (name == "n") return SweepVariable::N;
  if (name == "p") return SweepVariable::P;
  if (name == "beta-min" || name == "beta_min") return SweepVariable::BetaMin;
  throw DomainError("unknown sweep variable: " + name);
}

std::string to_string(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::Gamma: return "gamma";
    case SweepVariable::N: return "n";
    case SweepVariable::P: return "p";
    case SweepVariable::BetaMin: return "beta-min";
  }
  return "?";
}

std::vector<double> spaced_values(double start, double stop, int count,
                                  bool log_spacing) {
  if (count < 1) throw DomainError("spaced_values: count must be >= 1");
  if (log_spacing && (!(start > 0.0) || !(stop > 0.0)))
    throw DomainError("spaced_values: log spacing requires positive endpoints");
  std::vector<double> values(count);
  if (count == 1) {
    values[0] = start;
    return values;
  }
  if (log_spacing) {
    const double l0 = std::log(start), l1 = std::log(stop);
    for (int i = 0; i < count; ++i)
      values[i] = std::exp(l0 + (l1 - l0) * i / (count - 1));
  } else {
    for (int i = 0; i < count; ++i)
      values[i] = start + (stop - start) * i / (count - 1);
  }
  return values;
}

namespace {

ProblemParams with_value(const ProblemParams& base, SweepVariable variable,
                         double value) {
  ProblemParams params = base;
  switch (variable) {
    case SweepVariable::Gamma: params.gamma = value; break;
    case SweepVariable::N: params.n = static_cast<int>(value); break;
    case SweepVariable::P: params.p = static_cast<int>(value); break;
    case SweepVariable::BetaMin: params.beta_min = value; break;
  }
  validate(params);
  return params;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, double entropy_tol) {
  if (spec.values.empty()) throw DomainError("sweep: empty value list");
  std::vector<SweepRow> rows;
  rows.reserve(spec.values.size());
  for (double value : spec.values) {
    SweepRow row;
    row.params = with_value(spec.base, spec.variable, value);
    row.report = full_report(row.params, entropy_tol);
    row.corollary = corollary_bounds(row.params);
    row.rate_at_threshold =
        log_choose(row.params.p, row.params.k) / *row.report.sparse_threshold;
    rows.push_back(std::move(row));
  }
  return rows;
}

SlopeFitReport fit_loglog(const std::vector<std::pair<double, double>>& points,
                          std::string x_label, std::string y_label) {
  if (points.size() < 4)
    throw DomainError("slope fit: need at least 4 points");
  SlopeFitReport report;
  report.x_label = std::move(x_label);
  report.y_label = std::move(y_label);
  report.points = points;
  const std::size_t n = points.size();
  std::vector<double> lx(n), ly(n);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(points[i].first > 0.0) || !(points[i].second > 0.0))
      throw DomainError("slope fit: points must be strictly positive");
    lx[i] = std::log(points[i].first);
    ly[i] = std::log(points[i].second);
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("slope fit: degenerate x values");
  report.slope = sxy / sxx;
  report.intercept = my - report.slope * mx;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = report.slope * lx[i] + report.intercept;
    ss_res += (ly[i] - fit) * (ly[i] - fit);
    ss_tot += (ly[i] - my) * (ly[i] - my);
  }
  report.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return report;
}

SlopeFamily parse_slope_family(const std::string& name) {
  if (name == "dense-f2-fixed-k") return SlopeFamily::DenseF2FixedK;
  if (name == "dense-f1-linear-k") return SlopeFamily::DenseF1LinearK;
  if (name == "sparse-corollary-gamma-decay")
    return SlopeFamily::SparseCorollaryGammaDecay;
  throw DomainError("unknown slope family: " + name);
}

std::string to_string(SlopeFamily family) {
  switch (family) {
    case SlopeFamily::DenseF2FixedK: return "dense-f2-fixed-k";
    case SlopeFamily::DenseF1LinearK: return "dense-f1-linear-k";
    case SlopeFamily::SparseCorollaryGammaDecay:
      return "sparse-corollary-gamma-decay";
  }
  return "?";
}

SlopeFitReport slope_fit_family(SlopeFamily family,
                                const std::vector<int>& p_values) {
  if (p_values.size() < 4)
    throw DomainError("slope fit: need at least 4 p values");
  std::vector<std::pair<double, double>> points;
  points.reserve(p_values.size());
  switch (family) {
    case SlopeFamily::DenseF2FixedK: {
      const int k = 4;
      const double beta = std::sqrt(1.0 / k);
      for (int p : p_values)
        points.emplace_back(k * std::log(static_cast<double>(p - k)),
                            f2_bound(p, k, beta));
      return fit_loglog(points, "k*ln(p-k)", "f2");
    }
    case SlopeFamily::DenseF1LinearK: {
      for (int p : p_values) {
        const int k = (p + 3) / 4;  // ceil(p/4)
        const double beta = std::sqrt(1.0 / k);
        points.emplace_back(p * std::log(static_cast<double>(p)),
                            f1_bound(p, k, beta));
      }
      return fit_loglog(points, "p*ln(p)", "f1");
    }
    case SlopeFamily::SparseCorollaryGammaDecay: {
      const int k = 4;
      const double gamma = 1.0 / (k * std::log(static_cast<double>(k)));
      for (int p : p_values) {
        ProblemParams params =
            ProblemParams::make(1, p, k, std::sqrt(1.0 / k), gamma);
        const CorollaryBounds cb = corollary_bounds(params);
        const double bound =
            std::max({cb.g1_regime, cb.g2_regime, static_cast<double>(k - 1)});
        const double x = k * std::log(static_cast<double>(p - k)) /
                         (gamma * k * std::log(1.0 / gamma));
        points.emplace_back(x, bound);
      }
      return fit_loglog(points, "k*ln(p-k)/(gamma*k*ln(1/gamma))",
                        "corollary-bound");
    }
  }
  throw DomainError("unknown slope family");
}

}  // namespace suprec
