// Copyright 2026 The ursa developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ursa: evaluate variance-product uncertainty bounds, their equality
// witnesses, purity-sweep averages, and error-disturbance models from the
// command line.
//
// Exit codes: 0 success, 1 input error, 2 bound violation, 3 non-convergence.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ursa/io.hpp"

namespace {

using ursa::Tolerances;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitNonConvergence = 3;

/// Applies one "name=value" override to a Tolerances instance.
void apply_tol_override(Tolerances& tol, const std::string& spec) {
  const std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw ursa::RangeError("--tol expects name=value, got '" + spec + "'");
  }
  const std::string name = spec.substr(0, eq);
  double value = 0.0;
  try {
    value = std::stod(spec.substr(eq + 1));
  } catch (const std::exception&) {
    throw ursa::RangeError("--tol " + name + ": value is not a number");
  }
  if (!(value >= 0.0)) {
    throw ursa::RangeError("--tol " + name + ": value must be non-negative");
  }
  if (name == "hermiticity") tol.hermiticity = value;
  else if (name == "trace_one") tol.trace_one = value;
  else if (name == "negative_eigenvalue") tol.negative_eigenvalue = value;
  else if (name == "eigen_residual") tol.eigen_residual = value;
  else if (name == "degeneracy") tol.degeneracy = value;
  else if (name == "slack") tol.slack = value;
  else if (name == "tightness") tol.tightness = value;
  else if (name == "unitarity") tol.unitarity = value;
  else if (name == "meter_commutation") tol.meter_commutation = value;
  else if (name == "imaginary_residue") tol.imaginary_residue = value;
  else if (name == "unbiasedness") tol.unbiasedness = value;
  else if (name == "coefficient_flag") tol.coefficient_flag = value;
  else if (name == "commutator_degeneracy") tol.commutator_degeneracy = value;
  else throw ursa::RangeError("--tol: unknown tolerance '" + name + "'");
}

/// Prints to stdout and, when a path is set, also writes the file.
void emit(const std::string& text, const std::string& output_path) {
  std::fwrite(text.data(), 1, text.size(), stdout);
  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      throw ursa::Error("cannot open output file '" + output_path + "'");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
      throw ursa::Error("failed writing output file '" + output_path + "'");
    }
  }
}

struct CommonOptions {
  std::uint64_t seed = 42;
  std::vector<std::string> tol_overrides;
  std::string output_path;

  Tolerances tolerances() const {
    Tolerances tol = ursa::default_tolerances();
    for (const std::string& spec : tol_overrides) apply_tol_override(tol, spec);
    return tol;
  }
};

void add_common(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--seed", common.seed,
                  "Seed for every pseudo-random draw (flag wins over the "
                  "URSA_SEED environment variable)")
      ->envname("URSA_SEED")
      ->capture_default_str();
  sub->add_option("--tol", common.tol_overrides,
                  "Tolerance override as name=value; repeatable");
  sub->add_option("-o,--output", common.output_path,
                  "Also write the report to this file");
}

int run_check(const std::string& state_path, const std::string& a_path,
              const std::string& b_path, const std::string& kind_name,
              const CommonOptions& common) {
  const Tolerances tol = common.tolerances();
  const ursa::DensityMatrix rho = ursa::load_density(state_path, tol);
  const ursa::HermitianObservable a = ursa::load_observable(a_path, tol);
  const ursa::HermitianObservable b = ursa::load_observable(b_path, tol);

  std::vector<ursa::BoundReport> reports;
  if (kind_name == "all") {
    reports = ursa::check_all(rho, a, b, tol);
  } else {
    const std::optional<ursa::RelationKind> kind =
        ursa::relation_from_name(kind_name);
    if (!kind.has_value()) {
      throw ursa::RangeError("check: unknown relation '" + kind_name + "'");
    }
    reports.push_back(ursa::check(*kind, rho, a, b, tol));
  }

  bool all_hold = true;
  nlohmann::json j = nlohmann::json::array();
  for (const ursa::BoundReport& report : reports) {
    all_hold = all_hold && report.holds;
    j.push_back(ursa::report_to_json(report));
  }
  emit(j.dump(2) + "\n", common.output_path);
  return all_hold ? kExitOk : kExitViolation;
}

int run_sweep(double from, double to, int points, std::int64_t samples,
              const CommonOptions& common) {
  const Tolerances tol = common.tolerances();
  if (points < 1) throw ursa::RangeError("sweep: --points must be positive");
  if (points > 1 && !(to > from)) {
    throw ursa::RangeError("sweep: --to must exceed --from");
  }
  std::string text = ursa::sweep_csv_header() + "\n";
  for (int i = 0; i < points; ++i) {
    const double purity =
        points == 1 ? from
                    : from + (to - from) * static_cast<double>(i) /
                          static_cast<double>(points - 1);
    ursa::SeededRng rng(common.seed, static_cast<std::uint64_t>(i));
    const ursa::PuritySweepRow row =
        ursa::avg_bounds_mc(purity, samples, rng, {0, 0, 1}, tol);
    text += ursa::sweep_csv_row(row) + "\n";
  }
  emit(text, common.output_path);
  return kExitOk;
}

int run_witness(const std::string& state_path, double a_scale, double b_scale,
                const CommonOptions& common) {
  const Tolerances tol = common.tolerances();
  const ursa::DensityMatrix rho = ursa::load_density(state_path, tol);
  const ursa::ExtremalPair pair =
      ursa::extremal_pair(rho, a_scale, b_scale, tol);
  const ursa::BoundReport report = ursa::check(
      ursa::RelationKind::generalized_robertson, rho, pair.A, pair.B, tol);
  const double residual = std::abs(report.slack);
  const bool tight =
      residual <= tol.tightness * std::max(1.0, std::abs(report.lhs));

  nlohmann::json j;
  j["a"] = pair.a;
  j["b"] = pair.b;
  j["A"] = ursa::matrix_to_json(pair.A.matrix());
  j["B"] = ursa::matrix_to_json(pair.B.matrix());
  j["report"] = ursa::report_to_json(report);
  j["residual"] = residual;
  j["tight"] = tight;
  emit(j.dump(2) + "\n", common.output_path);
  return tight ? kExitOk : kExitViolation;
}

int run_optimize(const std::string& state_path, int restarts,
                 std::int64_t max_evals, double ratio_tol,
                 const CommonOptions& common) {
  const Tolerances tol = common.tolerances();
  const ursa::DensityMatrix rho = ursa::load_density(state_path, tol);
  ursa::RatioSearchConfig config;
  config.restarts = restarts;
  config.max_evals = max_evals;
  config.seed = common.seed;
  config.tol = ratio_tol;
  const ursa::RatioSearchResult result = ursa::minimize_ratio(rho, config, tol);
  const std::optional<double> c_prime = ursa::c_prime_opt(rho.spectrum(), tol);
  const double gap = result.best_ratio - c_prime.value();
  const bool reached = result.converged && std::abs(gap) <= config.tol;

  nlohmann::json j;
  j["best_ratio"] = result.best_ratio;
  j["c_prime_opt"] = c_prime.value();
  j["gap"] = gap;
  j["converged"] = reached;
  j["restarts"] = result.restarts;
  j["evaluations"] = result.evaluations;
  j["A"] = ursa::matrix_to_json(result.best_A.matrix());
  j["B"] = ursa::matrix_to_json(result.best_B.matrix());
  emit(j.dump(2) + "\n", common.output_path);
  return reached ? kExitOk : kExitNonConvergence;
}

int run_measure(const std::string& model_path, const CommonOptions& common) {
  const Tolerances tol = common.tolerances();
  const ursa::MeasurementModel model = ursa::load_model(model_path, tol);
  const ursa::ErrorDisturbanceReport report = ursa::evaluate(model, tol);
  emit(ursa::report_to_json(report).dump(2) + "\n", common.output_path);
  const bool violated = !report.ozawa1.generalized_holds ||
                        !report.ozawa2.generalized_holds ||
                        (report.unbiased &&
                         !report.arthurs_goodman.generalized_holds);
  return violated ? kExitViolation : kExitOk;
}

int run_suite(int trials, const std::vector<int>& dims,
              const CommonOptions& common) {
  const Tolerances tol = common.tolerances();
  if (trials < 1) throw ursa::RangeError("suite: --trials must be positive");
  std::string text;
  int failures = 0;

  for (const int d : dims) {
    if (d < 2) throw ursa::RangeError("suite: dims must be >= 2");
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
      ursa::SeededRng rng(common.seed,
                          static_cast<std::uint64_t>(d) * 1000 + t);
      const ursa::DensityMatrix rho = ursa::random_density(rng, d);
      const ursa::HermitianObservable a = ursa::random_hermitian(rng, d, tol);
      const ursa::HermitianObservable b = ursa::random_hermitian(rng, d, tol);
      for (const ursa::BoundReport& report :
           ursa::check_all(rho, a, b, tol)) {
        if (!report.holds) ++bad;
      }
    }
    failures += bad;
    text += "suite: bounds d=" + std::to_string(d) + " trials=" +
            std::to_string(trials) + ": " + (bad == 0 ? "PASS" : "FAIL") +
            "\n";
  }

  for (const int d : dims) {
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
      ursa::SeededRng rng(common.seed,
                          50000 + static_cast<std::uint64_t>(d) * 1000 + t);
      const ursa::RealVector lambda =
          ursa::random_nondegenerate_spectrum(rng, d);
      const ursa::DensityMatrix rho = ursa::random_density(rng, d, lambda);
      const ursa::ExtremalPair pair = ursa::extremal_pair(rho, 1.0, 1.0, tol);
      const ursa::BoundReport report =
          ursa::check(ursa::RelationKind::generalized_robertson, rho, pair.A,
                      pair.B, tol);
      if (std::abs(report.slack) >
          tol.tightness * std::max(1.0, std::abs(report.lhs))) {
        ++bad;
      }
    }
    failures += bad;
    text += "suite: witness d=" + std::to_string(d) + " trials=" +
            std::to_string(trials) + ": " + (bad == 0 ? "PASS" : "FAIL") +
            "\n";
  }

  {
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
      ursa::SeededRng rng(common.seed, 90000 + static_cast<std::uint64_t>(t));
      const ursa::MeasurementModel model = ursa::random_qubit_model(rng, tol);
      const ursa::ErrorDisturbanceReport report = ursa::evaluate(model, tol);
      if (!report.ozawa1.generalized_holds ||
          !report.ozawa2.generalized_holds) {
        ++bad;
      }
    }
    failures += bad;
    text += "suite: measurement trials=" + std::to_string(trials) + ": " +
            (bad == 0 ? "PASS" : "FAIL") + "\n";
  }

  text += failures == 0 ? "suite: all checks passed\n"
                        : "suite: " + std::to_string(failures) + " failures\n";
  emit(text, common.output_path);
  return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Variance-product uncertainty bounds: evaluation, equality witnesses, "
      "averaged-bound sweeps, and error-disturbance models"};
  app.require_subcommand(1);

  CommonOptions common;
  int exit_code = kExitOk;

  // check
  std::string check_state, check_a, check_b;
  std::string check_kind = "all";
  CLI::App* check = app.add_subcommand(
      "check", "Evaluate uncertainty relations for a state and two observables");
  check->add_option("--state", check_state, "Density-matrix JSON file")
      ->required();
  check->add_option("--a", check_a, "First observable JSON file")->required();
  check->add_option("--b", check_b, "Second observable JSON file")->required();
  check->add_option("--kind", check_kind,
                    "Relation name, or 'all' for the whole catalog")
      ->capture_default_str();
  add_common(check, common);
  check->callback([&] {
    exit_code = run_check(check_state, check_a, check_b, check_kind, common);
  });

  // sweep
  double sweep_from = 0.5, sweep_to = 1.0;
  int sweep_points = 11;
  std::int64_t sweep_samples = 10000;
  CLI::App* sweep = app.add_subcommand(
      "sweep",
      "Monte Carlo averages of the bounds over random qubit observable axes, "
      "as CSV over a purity grid");
  sweep->add_option("--from", sweep_from, "First purity value")
      ->capture_default_str();
  sweep->add_option("--to", sweep_to, "Last purity value")
      ->capture_default_str();
  sweep->add_option("--points", sweep_points, "Grid size")
      ->capture_default_str();
  sweep->add_option("--samples", sweep_samples, "Axis pairs per grid point")
      ->capture_default_str();
  add_common(sweep, common);
  sweep->callback([&] {
    exit_code =
        run_sweep(sweep_from, sweep_to, sweep_points, sweep_samples, common);
  });

  // witness
  std::string witness_state;
  double witness_a = 1.0, witness_b = 1.0;
  CLI::App* witness = app.add_subcommand(
      "witness",
      "Construct the equality pair for the generalized commutator bound");
  witness->add_option("--state", witness_state, "Density-matrix JSON file")
      ->required();
  witness->add_option("--a", witness_a, "Scale of the first observable")
      ->capture_default_str();
  witness->add_option("--b", witness_b, "Scale of the second observable")
      ->capture_default_str();
  add_common(witness, common);
  witness->callback([&] {
    exit_code = run_witness(witness_state, witness_a, witness_b, common);
  });

  // optimize
  std::string optimize_state;
  int optimize_restarts = 32;
  std::int64_t optimize_max_evals = 0;
  double optimize_ratio_tol = 1e-6;
  CLI::App* optimize = app.add_subcommand(
      "optimize",
      "Numerically minimize V(A)V(B)/|<[A,B]>|^2 and compare with the "
      "optimal coefficient");
  optimize->add_option("--state", optimize_state, "Density-matrix JSON file")
      ->required();
  optimize->add_option("--restarts", optimize_restarts, "Search restarts")
      ->capture_default_str();
  optimize
      ->add_option("--max-evals", optimize_max_evals,
                   "Total objective-evaluation budget (0 = default)")
      ->capture_default_str();
  optimize
      ->add_option("--ratio-tol", optimize_ratio_tol,
                   "Accepted |best - optimal| gap")
      ->capture_default_str();
  add_common(optimize, common);
  optimize->callback([&] {
    exit_code = run_optimize(optimize_state, optimize_restarts,
                             optimize_max_evals, optimize_ratio_tol, common);
  });

  // measure
  std::string measure_model;
  CLI::App* measure = app.add_subcommand(
      "measure",
      "Evaluate error-disturbance inequalities for an indirect-measurement "
      "model");
  measure->add_option("--model", measure_model, "Model JSON file")->required();
  add_common(measure, common);
  measure->callback([&] { exit_code = run_measure(measure_model, common); });

  // suite
  int suite_trials = 20;
  std::vector<int> suite_dims = {2, 3, 4};
  CLI::App* suite = app.add_subcommand(
      "suite", "Deterministic self-check battery over random inputs");
  suite->add_option("--trials", suite_trials, "Trials per check")
      ->capture_default_str();
  suite->add_option("--dims", suite_dims, "State dimensions")
      ->capture_default_str();
  add_common(suite, common);
  suite->callback([&] { exit_code = run_suite(suite_trials, suite_dims, common); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const ursa::NonConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNonConvergence;
  } catch (const ursa::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return exit_code;
}
