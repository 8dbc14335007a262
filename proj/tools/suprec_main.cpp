// suprec: information-theoretic lower bounds and Monte Carlo experiments
// for exact sparse-support recovery under dense and sparsified Gaussian
// measurement ensembles.
//
// Commands:
//   bounds         evaluate the dense/sparse thresholds at one parameter point
//   sweep          evaluate the thresholds along a parameter sweep
//   simulate       Monte Carlo error of the exhaustive decoder (ensemble A/B)
//   verify-lemmas  run the desk-scale lemma oracle suite
//   slopefit       growth-law slope fits over a list of dimensions
//
// Exit status: 0 success, 1 failed verification, 2 usage, 3 numeric, 4 capacity.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "suprec/bounds.hpp"
#include "suprec/csvfmt.hpp"
#include "suprec/ensemble.hpp"
#include "suprec/sweep.hpp"
#include "suprec/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace suprec;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitCapacity = 4;

void print_usage(std::ostream& os) {
  os << "usage: suprec <command> [options]\n"
        "commands:\n"
        "  bounds         evaluate necessary-condition thresholds\n"
        "  sweep          threshold sweep over gamma | n | p | beta-min\n"
        "  simulate       Monte Carlo decoding error (restricted ensemble A/B)\n"
        "  verify-lemmas  lemma oracle suite, CSV report\n"
        "  slopefit       growth-law slope fits\n"
        "run 'suprec <command> --help' for per-command options\n";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output path: " + path);
  file << content;
  if (!file) throw DomainError("failed writing output path: " + path);
}

EnsembleKind parse_ensemble(const std::string& name) {
  if (name == "std-gaussian") return EnsembleKind::StdGaussian;
  if (name == "rademacher") return EnsembleKind::Rademacher;
  if (name == "uniform") return EnsembleKind::UniformUnitVar;
  if (name == "sparsified") return EnsembleKind::SparsifiedGaussian;
  throw DomainError("unknown ensemble: " + name);
}

RestrictedEnsemble parse_restricted(const std::string& name) {
  if (name == "A") return RestrictedEnsemble::A;
  if (name == "B") return RestrictedEnsemble::B;
  throw DomainError("unknown restricted ensemble: " + name);
}

// Common parameter flags.  beta_min can be given directly or as its square.
struct ParamFlags {
  int p = 0;
  int k = 0;
  double beta_min = 0.0;
  double beta_min_sq = 0.0;
  double gamma = 1.0;
  int n = 0;
  bool has_beta = false, has_beta_sq = false, has_n = false;

  void register_on(CLI::App& app, bool require_n) {
    app.add_option("--p", p, "signal dimension")->required();
    app.add_option("--k", k, "signal sparsity")->required();
    auto* beta_opt = app.add_option("--beta-min", beta_min,
                                    "minimum nonzero magnitude");
    auto* beta_sq_opt = app.add_option("--beta-min-sq", beta_min_sq,
                                       "squared minimum nonzero magnitude");
    beta_opt->excludes(beta_sq_opt);
    beta_sq_opt->excludes(beta_opt);
    app.add_option("--gamma", gamma, "measurement sparsity in (0,1]");
    auto* n_opt = app.add_option("--n", n, "number of measurements");
    if (require_n) n_opt->required();
    app.final_callback([this, beta_opt, beta_sq_opt, n_opt] {
      has_beta = beta_opt->count() > 0;
      has_beta_sq = beta_sq_opt->count() > 0;
      has_n = n_opt->count() > 0;
    });
  }

  ProblemParams make() const {
    if (!has_beta && !has_beta_sq)
      throw DomainError("one of --beta-min or --beta-min-sq is required");
    double beta = beta_min;
    if (has_beta_sq) {
      if (beta_min_sq < 0.0) throw DomainError("--beta-min-sq must be >= 0");
      beta = std::sqrt(beta_min_sq);
    }
    return ProblemParams::make(has_n ? n : 1, p, k, beta, gamma);
  }
};

void configure(CLI::App& app) {
  app.set_config("--config", "", "key = value configuration file");
  app.allow_config_extras(CLI::config_extras_mode::error);
}

int parse_or_exit(CLI::App& app, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return -1;  // parsed successfully
}

std::vector<std::string> bound_columns(bool with_rate) {
  std::vector<std::string> cols = {
      "p",  "k",  "beta_min",         "gamma",  "n",
      "f1", "f2", "k_minus_1",        "dense_threshold",
      "g1", "g2", "sparse_threshold", "H_psi1", "H_psi2",
      "regime",   "g1_lower",         "g2_lower"};
  if (with_rate) cols.push_back("rate_at_threshold");
  return cols;
}

std::vector<std::string> bound_fields(const ProblemParams& params, bool has_n,
                                      const BoundReport& report,
                                      const CorollaryBounds& corollary,
                                      std::optional<double> rate_at_threshold) {
  std::vector<std::string> fields = {
      format_int(params.p),
      format_int(params.k),
      format_sig9(params.beta_min),
      format_sig9(params.gamma),
      has_n ? format_int(params.n) : std::string(),
      format_sig9(report.f1),
      format_sig9(report.f2),
      format_sig9(report.k_minus_1),
      format_sig9(report.dense_threshold),
      format_sig9(report.g1),
      format_sig9(report.g2),
      format_sig9(report.sparse_threshold),
      format_sig9(report.entropy_psi1),
      format_sig9(report.entropy_psi2),
      to_string(report.regime),
      format_sig9(corollary.g1_regime),
      format_sig9(corollary.g2_regime)};
  if (rate_at_threshold) fields.push_back(format_sig9(*rate_at_threshold));
  return fields;
}

ordered_json bound_json(const ProblemParams& params, bool has_n,
                        const BoundReport& report,
                        const CorollaryBounds& corollary,
                        std::optional<double> rate_at_threshold) {
  ordered_json row;
  row["p"] = params.p;
  row["k"] = params.k;
  row["beta_min"] = params.beta_min;
  row["gamma"] = params.gamma;
  if (has_n) row["n"] = params.n;
  row["f1"] = report.f1;
  row["f2"] = report.f2;
  row["k_minus_1"] = report.k_minus_1;
  row["dense_threshold"] = report.dense_threshold;
  row["g1"] = *report.g1;
  row["g2"] = *report.g2;
  row["sparse_threshold"] = *report.sparse_threshold;
  row["H_psi1"] = *report.entropy_psi1;
  row["H_psi2"] = *report.entropy_psi2;
  row["regime"] = to_string(report.regime);
  row["g1_lower"] = corollary.g1_regime;
  row["g2_lower"] = corollary.g2_regime;
  if (rate_at_threshold) row["rate_at_threshold"] = *rate_at_threshold;
  return row;
}

int cmd_bounds(std::vector<std::string> args) {
  CLI::App app{"evaluate necessary-condition thresholds", "suprec bounds"};
  ParamFlags flags;
  std::string out, format = "csv";
  flags.register_on(app, false);
  app.add_option("--out", out, "output path ('-' = stdout)");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  configure(app);
  if (int code = parse_or_exit(app, std::move(args)); code >= 0) return code;

  const ProblemParams params = flags.make();
  const BoundReport report = full_report(params);
  const CorollaryBounds corollary = corollary_bounds(params);
  if (format == "json") {
    write_output(out, bound_json(params, flags.has_n, report, corollary,
                                 std::nullopt)
                          .dump(2) +
                          "\n");
  } else {
    std::string csv = csv_row(bound_columns(false));
    csv += csv_row(
        bound_fields(params, flags.has_n, report, corollary, std::nullopt));
    write_output(out, csv);
  }
  return kExitOk;
}

int cmd_sweep(std::vector<std::string> args) {
  CLI::App app{"threshold sweep over one variable", "suprec sweep"};
  ParamFlags flags;
  std::string out, format = "csv", var, spacing = "log";
  std::vector<double> values;
  double start = 0.0, stop = 0.0;
  int count = 0;
  flags.register_on(app, false);
  app.add_option("--var", var, "gamma | n | p | beta-min")->required();
  auto* values_opt =
      app.add_option("--values", values, "explicit sweep values")
          ->delimiter(',');
  auto* start_opt = app.add_option("--start", start, "sweep start");
  auto* stop_opt = app.add_option("--stop", stop, "sweep stop");
  auto* count_opt = app.add_option("--count", count, "number of sweep points");
  app.add_option("--spacing", spacing)
      ->check(CLI::IsMember({"linear", "log"}));
  app.add_option("--out", out, "output path ('-' = stdout)");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  configure(app);
  if (int code = parse_or_exit(app, std::move(args)); code >= 0) return code;

  SweepSpec spec;
  spec.variable = parse_sweep_variable(var);
  spec.base = flags.make();
  if (values_opt->count() > 0) {
    if (start_opt->count() || stop_opt->count() || count_opt->count())
      throw DomainError("--values excludes --start/--stop/--count");
    spec.values = values;
  } else {
    if (!start_opt->count() || !stop_opt->count() || !count_opt->count())
      throw DomainError("need --values or all of --start/--stop/--count");
    spec.values = spaced_values(start, stop, count, spacing == "log");
  }
  const std::vector<SweepRow> rows = run_sweep(spec);
  const bool show_n = flags.has_n || spec.variable == SweepVariable::N;

  if (format == "json") {
    ordered_json doc = ordered_json::array();
    for (const SweepRow& row : rows)
      doc.push_back(bound_json(row.params, show_n, row.report, row.corollary,
                               row.rate_at_threshold));
    write_output(out, doc.dump(2) + "\n");
  } else {
    std::string csv = csv_row(bound_columns(true));
    for (const SweepRow& row : rows)
      csv += csv_row(bound_fields(row.params, show_n, row.report,
                                  row.corollary, row.rate_at_threshold));
    write_output(out, csv);
  }
  return kExitOk;
}

int cmd_simulate(std::vector<std::string> args) {
  CLI::App app{"Monte Carlo decoding error", "suprec simulate"};
  ParamFlags flags;
  std::string out, format = "csv", ensemble = "std-gaussian", restricted = "A";
  std::uint64_t trials = 0, seed = 0;
  int threads = 0;
  flags.register_on(app, true);
  app.add_option("--trials", trials, "Monte Carlo trials")->required();
  app.add_option("--seed", seed, "64-bit master seed")->required();
  app.add_option("--ensemble", ensemble,
                 "std-gaussian | rademacher | uniform | sparsified");
  app.add_option("--restricted", restricted, "A | B");
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_option("--out", out, "output path ('-' = stdout)");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  configure(app);
  if (int code = parse_or_exit(app, std::move(args)); code >= 0) return code;

  const ProblemParams params = flags.make();
  const EnsembleKind kind = parse_ensemble(ensemble);
  const RestrictedEnsemble which = parse_restricted(restricted);
  const MonteCarloResult result =
      monte_carlo_error(params, kind, which, trials, seed, threads);
  const double fano = which == RestrictedEnsemble::A
                          ? fano_error_lower_a(params)
                          : fano_error_lower_b(params);

  if (format == "json") {
    ordered_json row;
    row["p"] = params.p;
    row["k"] = params.k;
    row["beta_min"] = params.beta_min;
    row["gamma"] = params.gamma;
    row["n"] = params.n;
    row["ensemble"] = to_string(kind);
    row["restricted"] = restricted;
    row["trials"] = result.trials;
    row["errors"] = result.errors;
    row["p_hat"] = result.p_hat;
    row["ci_low"] = result.ci_low;
    row["ci_high"] = result.ci_high;
    row["fano_lower"] = fano;
    row["seed"] = result.seed;
    write_output(out, row.dump(2) + "\n");
  } else {
    std::string csv = csv_row({"p", "k", "beta_min", "gamma", "n", "ensemble",
                               "restricted", "trials", "errors", "p_hat",
                               "ci_low", "ci_high", "fano_lower", "seed"});
    csv += csv_row({format_int(params.p), format_int(params.k),
                    format_sig9(params.beta_min), format_sig9(params.gamma),
                    format_int(params.n), to_string(kind), restricted,
                    format_u64(result.trials), format_u64(result.errors),
                    format_sig9(result.p_hat), format_sig9(result.ci_low),
                    format_sig9(result.ci_high), format_sig9(fano),
                    format_u64(result.seed)});
    write_output(out, csv);
  }
  return kExitOk;
}

int cmd_verify_lemmas(std::vector<std::string> args) {
  CLI::App app{"lemma oracle suite", "suprec verify-lemmas"};
  std::string out, format = "csv";
  std::vector<std::string> scope;
  std::uint64_t seed = 0;
  int threads = 0;
  auto* scope_opt =
      app.add_option("--scope", scope,
                     "lemma1..lemma6, appendixE (default: all)")
          ->delimiter(',');
  app.add_option("--seed", seed, "64-bit master seed")->required();
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_option("--out", out, "output path ('-' = stdout)");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  configure(app);
  if (int code = parse_or_exit(app, std::move(args)); code >= 0) return code;

  if (scope_opt->count() == 0) scope = all_lemma_scopes();
  const std::vector<LemmaCheckRow> rows = verify_lemmas(scope, seed, threads);

  bool all_pass = true;
  if (format == "json") {
    ordered_json doc = ordered_json::array();
    for (const LemmaCheckRow& row : rows) {
      ordered_json item;
      item["scope"] = row.scope;
      item["check"] = row.check;
      item["params"] = row.params;
      item["value"] = row.value;
      if (row.lower) item["lower"] = *row.lower;
      if (row.upper) item["upper"] = *row.upper;
      item["pass"] = row.pass;
      doc.push_back(item);
      all_pass &= row.pass;
    }
    write_output(out, doc.dump(2) + "\n");
  } else {
    std::string csv =
        csv_row({"scope", "check", "params", "value", "lower", "upper", "pass"});
    for (const LemmaCheckRow& row : rows) {
      csv += csv_row({row.scope, row.check, row.params, format_sig9(row.value),
                      format_sig9(row.lower), format_sig9(row.upper),
                      row.pass ? "pass" : "fail"});
      all_pass &= row.pass;
    }
    write_output(out, csv);
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_slopefit(std::vector<std::string> args) {
  CLI::App app{"growth-law slope fits", "suprec slopefit"};
  std::string out, format = "csv", family;
  std::vector<int> p_values = {64, 128, 256, 512, 1024, 2048, 4096};
  app.add_option("--family", family,
                 "dense-f2-fixed-k | dense-f1-linear-k | "
                 "sparse-corollary-gamma-decay")
      ->required();
  app.add_option("--p-values", p_values, "signal dimensions (>= 4 values)")
      ->delimiter(',');
  app.add_option("--out", out, "output path ('-' = stdout)");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  configure(app);
  if (int code = parse_or_exit(app, std::move(args)); code >= 0) return code;

  const SlopeFamily fam = parse_slope_family(family);
  const SlopeFitReport fit = slope_fit_family(fam, p_values);

  if (format == "json") {
    ordered_json doc;
    doc["family"] = family;
    doc["x_label"] = fit.x_label;
    doc["y_label"] = fit.y_label;
    doc["slope"] = fit.slope;
    doc["intercept"] = fit.intercept;
    doc["r_squared"] = fit.r_squared;
    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < fit.points.size(); ++i) {
      ordered_json point;
      point["p"] = p_values[i];
      point["x"] = fit.points[i].first;
      point["y"] = fit.points[i].second;
      points.push_back(point);
    }
    doc["points"] = points;
    write_output(out, doc.dump(2) + "\n");
  } else {
    std::string csv = csv_row({"family", "x_label", "y_label", "p", "x", "y",
                               "slope", "intercept", "r_squared"});
    for (std::size_t i = 0; i < fit.points.size(); ++i)
      csv += csv_row({family, fit.x_label, fit.y_label,
                      format_int(p_values[i]), format_sig9(fit.points[i].first),
                      format_sig9(fit.points[i].second), format_sig9(fit.slope),
                      format_sig9(fit.intercept), format_sig9(fit.r_squared)});
    write_output(out, csv);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    print_usage(std::cerr);
    return kExitUsage;
  }
  const std::string command = args.front();
  args.erase(args.begin());
  if (command == "--help" || command == "-h" || command == "help") {
    print_usage(std::cout);
    return kExitOk;
  }
  try {
    if (command == "bounds") return cmd_bounds(std::move(args));
    if (command == "sweep") return cmd_sweep(std::move(args));
    if (command == "simulate") return cmd_simulate(std::move(args));
    if (command == "verify-lemmas") return cmd_verify_lemmas(std::move(args));
    if (command == "slopefit") return cmd_slopefit(std::move(args));
    std::cerr << "unknown command: " << command << "\n";
    print_usage(std::cerr);
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what()
              << " (achieved error " << e.achieved_error() << ")\n";
    return kExitNumeric;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
