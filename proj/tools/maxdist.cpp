// Command-line entry point: sampling, diameters, normalizations, experiment
// simulation and verification suites.
//
// Exit codes: 0 success, 1 verification criterion failed, 2 I/O failure,
// 3 precondition/guard violation, 4 config parse error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maxdist/errors.hpp"
#include "maxdist/json_io.hpp"
#include "maxdist/montecarlo.hpp"
#include "maxdist/normalization.hpp"
#include "maxdist/verify.hpp"

namespace {

using namespace maxdist;

constexpr int kExitOk = 0;
constexpr int kExitCriterionFailed = 1;
constexpr int kExitIo = 2;
constexpr int kExitGuard = 3;
constexpr int kExitConfig = 4;

// Inline JSON or @path indirection for --model / --config values.
Json load_json_argument(const std::string& value, const char* what) {
  if (!value.empty() && value.front() == '@') {
    return parse_json(read_file(value.substr(1)), what);
  }
  return parse_json(value, what);
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + out_path);
  out << text;
  if (!out) throw IoError("write failure: " + out_path);
}

struct CommonOptions {
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--seed", opts.seed, "64-bit seed; all randomness derives from it");
  cmd->add_option("--threads", opts.threads, "worker threads (default: all cores)");
  cmd->add_option("--out,-o", opts.out, "output path (default: stdout)");
}

int run_sample(const std::string& model_json, long long n, const CommonOptions& opts) {
  const SphericalModel model = model_from_json(load_json_argument(model_json, "model"));
  RngStream rng = make_stream(opts.seed, 0x5a);
  const PointCloud cloud = sample_points(model, static_cast<std::size_t>(n), rng);
  std::ostringstream out;
  write_points_csv(out, cloud);
  write_output(opts.out, out.str());
  return kExitOk;
}

int run_diameter(const std::string& in_path, const std::string& algorithm,
                 const CommonOptions& opts) {
  PointCloud cloud;
  if (in_path.empty() || in_path == "-") {
    cloud = read_points_csv(std::cin);
  } else {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + in_path);
    cloud = read_points_csv(in);
  }
  const DiameterResult result =
      algorithm == "naive" ? diameter_naive(cloud) : diameter_pruned(cloud);
  Json j;
  j["value"] = result.value;
  j["i"] = result.i;
  j["j"] = result.j;
  j["comparisons"] = result.comparisons;
  write_output(opts.out, j.dump(2));
  return kExitOk;
}

int run_normalize(const std::string& model_json, long long n, double lambda,
                  const CommonOptions& opts) {
  const SphericalModel model = model_from_json(load_json_argument(model_json, "model"));
  Json j;
  j["n"] = n;
  if (const auto* power = std::get_if<PowerLaw>(&model)) {
    const double gamma_n = frechet_gamma_n(power->c_f, power->alpha_f, n);
    j["center"] = 0.0;
    j["scale"] = gamma_n;
    j["law"] = law_to_json(Frechet{power->alpha_f});
    j["statistic"] = "norm-max";
    j["extras"]["gamma_n"] = gamma_n;
    j["extras"]["interpoint_limit"] = "z_alpha (no closed form; simulated)";
  } else if (const auto* bounded = std::get_if<BoundedTail>(&model)) {
    const WeibullInterpointMapping m =
        weibull_interpoint_normalization(bounded->alpha_w, bounded->c_w, bounded->dim, n);
    j["center"] = 2.0;
    j["scale"] = 1.0 / (m.scale_const * std::pow(static_cast<double>(n), m.p));
    j["law"] = law_to_json(m.law());
    j["statistic"] = "interpoint-max";
    j["extras"]["exponent_p"] = m.p;
    j["extras"]["survival_const"] = m.survival_const;
    j["extras"]["scale_const"] = m.scale_const;
    if (bounded->alpha_w > 0.0) {
      const WeibullNormMaxMapping nm =
          weibull_norm_max_normalization(bounded->alpha_w, bounded->c_w, n);
      j["extras"]["norm_max"] = {{"center", 1.0},
                                 {"scale", 1.0 / (nm.scale_const *
                                                  std::pow(static_cast<double>(n), nm.p))},
                                 {"law", law_to_json(NegWeibull{nm.shape})}};
    } else {
      j["extras"]["norm_max"] = "degenerate: P(M_n = 1) -> 1";
    }
  } else {
    const GammaTail gt = std::holds_alternative<Kotz>(model) ? std::get<Kotz>(model).resolved()
                                                             : std::get<GammaTail>(model);
    const AffineNormalization norm = gt.dim == 1
                                         ? d1_interpoint_normalization(gt, n)
                                         : gammatail_interpoint_normalization(gt, n);
    const AnBn ab = gammatail_anbn(gt, n);
    j["center"] = norm.center;
    j["scale"] = norm.scale;
    j["law"] = law_to_json(norm.law);
    j["statistic"] = "interpoint-max";
    j["extras"]["a_n"] = ab.a_n;
    j["extras"]["b_n"] = ab.b_n;
    if (gt.dim >= 2) {
      const PairThreshold pt = rn_sn_threshold(ab.a_n, ab.b_n, gt.dim, lambda);
      j["extras"]["lambda"] = lambda;
      j["extras"]["r_n"] = pt.r_n;
      j["extras"]["s_n"] = pt.s_n;
      j["extras"]["threshold"] = pt.threshold;
      j["extras"]["cap"] = pt.cap;
      j["extras"]["tau_n"] = tau_n(ab.a_n, ab.b_n, gt.dim);
    }
  }
  write_output(opts.out, j.dump(2));
  return kExitOk;
}

int run_simulate(const std::string& config_json, const std::string& samples_csv,
                 const std::string& format, const CommonOptions& opts, bool seed_given,
                 bool threads_given) {
  Json j = load_json_argument(config_json, "config");
  if (!j.is_object() || !j.contains("experiment") || !j["experiment"].is_string()) {
    throw ConfigError("config requires an 'experiment' string");
  }
  const std::string experiment = j["experiment"].get<std::string>();
  ExperimentConfig cfg = config_from_json(j);
  if (seed_given) cfg.seed = opts.seed;
  if (threads_given) cfg.threads = opts.threads;

  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  if (experiment == "gumbel") {
    report = run_gumbel_experiment(cfg);
  } else if (experiment == "poisson_count") {
    report = run_poisson_count_experiment(cfg);
  } else if (experiment == "weibull") {
    report = run_weibull_experiment(cfg);
  } else if (experiment == "frechet") {
    report = run_frechet_experiment(cfg);
  } else {
    throw ConfigError("unknown experiment: " + experiment);
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  // wall time goes to stderr so report bytes stay deterministic
  std::fprintf(stderr, "simulate %s: %.2f s\n", experiment.c_str(), elapsed.count());

  if (!samples_csv.empty()) {
    std::ofstream csv(samples_csv, std::ios::binary);
    if (!csv) throw IoError("cannot open samples CSV: " + samples_csv);
    write_samples_csv(csv, report);
    if (!csv) throw IoError("write failure: " + samples_csv);
  }
  if (format == "csv") {
    std::ostringstream out;
    write_samples_csv(out, report);
    write_output(opts.out, out.str());
  } else {
    write_output(opts.out, report_to_json(report).dump(2));
  }
  return kExitOk;
}

int run_verify(const std::string& suite, double scale, const CommonOptions& opts) {
  VerifyBudget budget;
  budget.seed = opts.seed;
  budget.threads = opts.threads;
  budget.scale = scale;
  Json out;
  bool all_pass = true;
  if (suite == "all") {
    out["suites"] = Json::array();
    for (const auto& name : verify_suite_names()) {
      const Scorecard card = run_verify_suite(name, budget);
      out["suites"].push_back(scorecard_to_json(card));
      all_pass = all_pass && card.pass();
    }
    out["pass"] = all_pass;
  } else {
    const Scorecard card = run_verify_suite(suite, budget);
    out = scorecard_to_json(card);
    all_pass = card.pass();
  }
  write_output(opts.out, out.dump(2));
  return all_pass ? kExitOk : kExitCriterionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and verification toolkit for extreme interpoint distances"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* sample_cmd = app.add_subcommand("sample", "draw points and write CSV");
  std::string model_json;
  long long sample_n = 1;
  sample_cmd->add_option("--model", model_json, "model JSON (inline or @file)")->required();
  sample_cmd->add_option("--n", sample_n, "number of points")->required();
  add_common(sample_cmd, opts);

  auto* diameter_cmd = app.add_subcommand("diameter", "exact diameter of CSV points");
  std::string in_path;
  std::string algorithm = "pruned";
  diameter_cmd->add_option("--in,-i", in_path, "input CSV (default: stdin)");
  diameter_cmd->add_option("--algorithm", algorithm, "pruned|naive")
      ->check(CLI::IsMember({"pruned", "naive"}));
  add_common(diameter_cmd, opts);

  auto* normalize_cmd = app.add_subcommand("normalize", "centering/scaling for a model and n");
  long long normalize_n = 0;
  double lambda = 0.0;
  normalize_cmd->add_option("--model", model_json, "model JSON (inline or @file)")->required();
  normalize_cmd->add_option("--n", normalize_n, "sample size")->required();
  normalize_cmd->add_option("--lambda", lambda, "pair-count level for threshold extras");
  add_common(normalize_cmd, opts);

  auto* simulate_cmd = app.add_subcommand("simulate", "run an experiment from a config");
  std::string config_json;
  std::string samples_csv;
  std::string format = "json";
  simulate_cmd->add_option("--config", config_json, "experiment config JSON (inline or @file)")
      ->required();
  simulate_cmd->add_option("--samples-csv", samples_csv, "write standardized samples CSV here");
  simulate_cmd->add_option("--format", format, "report format: json|csv (csv = samples table)")
      ->check(CLI::IsMember({"json", "csv"}));
  add_common(simulate_cmd, opts);

  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  double scale = 1.0;
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--scale", scale, "budget multiplier (1 = full contract budgets)");
  add_common(verify_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (sample_cmd->parsed()) return run_sample(model_json, sample_n, opts);
    if (diameter_cmd->parsed()) return run_diameter(in_path, algorithm, opts);
    if (normalize_cmd->parsed()) return run_normalize(model_json, normalize_n, lambda, opts);
    if (simulate_cmd->parsed()) {
      return run_simulate(config_json, samples_csv, format, opts,
                          simulate_cmd->count("--seed") > 0, simulate_cmd->count("--threads") > 0);
    }
    if (verify_cmd->parsed()) return run_verify(suite, scale, opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const GuardError& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitGuard;
  }
  return kExitConfig;
}
