#pragma once

// JSON schemas for models, laws, experiment configs and reports, plus the
// point/sample CSV formats. All emission uses ordered_json so output bytes
// are deterministic.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxdist/errors.hpp"
#include "maxdist/limit_laws.hpp"
#include "maxdist/montecarlo.hpp"
#include "maxdist/point_cloud.hpp"
#include "maxdist/radial_models.hpp"

namespace maxdist {

using Json = nlohmann::ordered_json;

namespace detail {

inline double require_number(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw ConfigError(std::string("model/config field missing or not numeric: ") + field);
  }
  return j[field].get<double>();
}

inline double number_or(const Json& j, const char* field, double fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_number()) {
    throw ConfigError(std::string("field not numeric: ") + field);
  }
  return j[field].get<double>();
}

inline int require_dim(const Json& j) {
  if (!j.contains("d") || !j["d"].is_number_integer()) {
    throw ConfigError("model field 'd' missing or not an integer");
  }
  return j["d"].get<int>();
}

}  // namespace detail

inline std::string bounded_kind_name(BoundedKind kind) {
  switch (kind) {
    case BoundedKind::pure_weibull_radius:
      return "pure-weibull-radius";
    case BoundedKind::uniform_ball:
      return "uniform-ball";
    case BoundedKind::uniform_sphere:
      return "uniform-sphere";
  }
  return "";
}

inline BoundedKind bounded_kind_from(const std::string& name) {
  if (name == "pure-weibull-radius") return BoundedKind::pure_weibull_radius;
  if (name == "uniform-ball") return BoundedKind::uniform_ball;
  if (name == "uniform-sphere") return BoundedKind::uniform_sphere;
  throw ConfigError("unknown bounded kind: " + name);
}

inline SphericalModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw ConfigError("model must be an object with a 'family' string");
  }
  const std::string family = j["family"].get<std::string>();
  const int d = detail::require_dim(j);
  SphericalModel model;
  if (family == "gamma_tail") {
    model = GammaTail{detail::require_number(j, "alpha"), detail::require_number(j, "beta"),
                      detail::require_number(j, "gamma"), d};
  } else if (family == "kotz") {
    model = Kotz{detail::require_number(j, "kappa"), detail::require_number(j, "b"), d};
  } else if (family == "bounded") {
    if (!j.contains("kind") || !j["kind"].is_string()) {
      throw ConfigError("bounded model requires a 'kind' string");
    }
    const BoundedKind kind = bounded_kind_from(j["kind"].get<std::string>());
    double alpha_w = 0.0;
    double c_w = 1.0;
    switch (kind) {
      case BoundedKind::pure_weibull_radius:
        alpha_w = detail::require_number(j, "alpha_w");
        c_w = detail::number_or(j, "c_w", 1.0);
        break;
      case BoundedKind::uniform_ball:
        alpha_w = detail::number_or(j, "alpha_w", 1.0);
        c_w = detail::number_or(j, "c_w", static_cast<double>(d));
        break;
      case BoundedKind::uniform_sphere:
        alpha_w = detail::number_or(j, "alpha_w", 0.0);
        c_w = detail::number_or(j, "c_w", 1.0);
        break;
    }
    model = BoundedTail{alpha_w, c_w, kind, d};
  } else if (family == "power_law") {
    model = PowerLaw{detail::require_number(j, "alpha_f"), detail::require_number(j, "c_f"), d};
  } else {
    throw ConfigError("unknown model family: " + family);
  }
  try {
    validate(model);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid model parameters: ") + e.what());
  }
  return model;
}

inline Json model_to_json(const SphericalModel& model) {
  Json j;
  j["family"] = family_name(model);
  j["d"] = dimension(model);
  if (const auto* gt = std::get_if<GammaTail>(&model)) {
    j["alpha"] = gt->alpha;
    j["beta"] = gt->beta;
    j["gamma"] = gt->gamma_exp;
  } else if (const auto* kotz = std::get_if<Kotz>(&model)) {
    j["kappa"] = kotz->kappa;
    j["b"] = kotz->b;
  } else if (const auto* bounded = std::get_if<BoundedTail>(&model)) {
    j["kind"] = bounded_kind_name(bounded->kind);
    j["alpha_w"] = bounded->alpha_w;
    j["c_w"] = bounded->c_w;
  } else if (const auto* power = std::get_if<PowerLaw>(&model)) {
    j["alpha_f"] = power->alpha_f;
    j["c_f"] = power->c_f;
  }
  return j;
}

inline LimitLaw law_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("law") || !j["law"].is_string()) {
    throw ConfigError("law must be an object with a 'law' string");
  }
  const std::string name = j["law"].get<std::string>();
  if (name == "gumbel") return Gumbel{};
  if (name == "gumbel_sum") return GumbelSum{};
  if (name == "neg_weibull") {
    LimitLaw law = NegWeibull{detail::require_number(j, "alpha")};
    validate(law);
    return law;
  }
  if (name == "frechet") {
    LimitLaw law = Frechet{detail::require_number(j, "alpha")};
    validate(law);
    return law;
  }
  throw ConfigError("unknown law: " + name);
}

inline Json law_to_json(const LimitLaw& law) {
  Json j;
  j["law"] = law_name(law);
  if (const auto* w = std::get_if<NegWeibull>(&law)) j["alpha"] = w->alpha;
  if (const auto* f = std::get_if<Frechet>(&law)) j["alpha"] = f->alpha;
  return j;
}

inline StatisticSelector statistic_selector_from(const std::string& name) {
  if (name == "interpoint-max") return StatisticSelector::interpoint_max;
  if (name == "norm-max") return StatisticSelector::norm_max;
  if (name == "both") return StatisticSelector::both;
  throw ConfigError("unknown statistic selector: " + name);
}

inline ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (!j.contains("model")) throw ConfigError("config requires a 'model' object");
  ExperimentConfig cfg;
  cfg.model = model_from_json(j["model"]);
  if (!j.contains("n_values") || !j["n_values"].is_array() || j["n_values"].empty()) {
    throw ConfigError("config requires a nonempty 'n_values' array");
  }
  for (const auto& v : j["n_values"]) {
    if (!v.is_number_integer()) throw ConfigError("n_values must be integers");
    cfg.n_values.push_back(v.get<long long>());
  }
  cfg.replications = static_cast<long long>(detail::number_or(j, "replications", 1.0));
  cfg.seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : 0;
  cfg.lambda = detail::number_or(j, "lambda", 0.0);
  cfg.epsilon = detail::number_or(j, "epsilon", 1e-2);
  cfg.z_draws = static_cast<long long>(detail::number_or(j, "z_draws", 0.0));
  if (j.contains("statistic")) {
    if (!j["statistic"].is_string()) throw ConfigError("'statistic' must be a string");
    cfg.statistic = statistic_selector_from(j["statistic"].get<std::string>());
  }
  cfg.threads = static_cast<int>(detail::number_or(j, "threads", 0.0));
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  return cfg;
}

inline Json run_report_to_json(const RunReport& run, bool include_samples) {
  Json j;
  j["n"] = run.n;
  j["replications"] = run.replications;
  if (run.b_n != 0.0) {
    j["a_n"] = run.a_n;
    j["b_n"] = run.b_n;
  }
  if (run.scale != 0.0) {
    j["center"] = run.center;
    j["scale"] = run.scale;
  }
  if (run.ks_interpoint) j["ks_interpoint"] = *run.ks_interpoint;
  if (run.ks_norm_max) j["ks_norm_max"] = *run.ks_norm_max;
  if (run.ks_two_sample_z) j["ks_two_sample_z"] = *run.ks_two_sample_z;
  if (run.gap_ratio_median) j["gap_ratio_median"] = *run.gap_ratio_median;
  if (!run.w_pmf.empty()) {
    j["r_n"] = run.r_n;
    j["s_n"] = run.s_n;
    j["threshold"] = run.threshold;
    j["cap"] = run.cap;
    j["w_pmf"] = run.w_pmf;
    j["p_w0"] = run.p_w0;
    j["tv_poisson"] = run.tv_poisson;
    j["mean_wprime"] = run.mean_wprime;
    j["freq_mismatch"] = run.freq_mismatch;
  }
  if (!run.z_samples.empty()) j["frac_offtop_pair"] = run.frac_offtop_pair;
  j["comparisons"] = run.comparisons;
  if (include_samples) {
    if (!run.interpoint_std.empty()) j["interpoint_std"] = run.interpoint_std;
    if (!run.norm_std.empty()) j["norm_std"] = run.norm_std;
    if (!run.gap_ratio.empty()) j["gap_ratio"] = run.gap_ratio;
    if (!run.survival_stat.empty()) j["survival_stat"] = run.survival_stat;
    if (!run.z_samples.empty()) j["z_samples"] = run.z_samples;
  }
  return j;
}

inline Json report_to_json(const ExperimentReport& report, bool include_samples = false) {
  Json j;
  j["kind"] = report.kind;
  j["runs"] = Json::array();
  for (const auto& run : report.runs) {
    j["runs"].push_back(run_report_to_json(run, include_samples));
  }
  return j;
}

/// 17 significant digits: lossless round trip for 64-bit doubles.
inline std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

inline void write_points_csv(std::ostream& out, const PointCloud& cloud) {
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto row = cloud.point(i);
    for (int k = 0; k < cloud.dim; ++k) {
      if (k > 0) out << ',';
      out << format_double(row[k]);
    }
    out << '\n';
  }
}

/// One point per row, d columns, no header; d inferred from the first row.
inline PointCloud read_points_csv(std::istream& in) {
  std::vector<double> coords;
  int dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = line.find(',', pos);
      const std::string cell =
          line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ConfigError("bad CSV value at line " + std::to_string(line_no) + ": '" + cell + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (dim == 0) {
      dim = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != dim) {
      throw ConfigError("ragged CSV: line " + std::to_string(line_no) + " has " +
                        std::to_string(row.size()) + " columns, expected " + std::to_string(dim));
    }
    coords.insert(coords.end(), row.begin(), row.end());
  }
  if (coords.empty()) throw ConfigError("empty CSV input");
  return make_point_cloud(dim, std::move(coords));
}

/// Long-format standardized samples: columns n, rep, stat_name, value.
inline void write_samples_csv(std::ostream& out, const ExperimentReport& report) {
  out << "n,rep,stat_name,value\n";
  for (const auto& run : report.runs) {
    const auto emit = [&](const std::vector<double>& values, const char* stat) {
      for (std::size_t rep = 0; rep < values.size(); ++rep) {
        out << run.n << ',' << rep << ',' << stat << ',' << format_double(values[rep]) << '\n';
      }
    };
    emit(run.interpoint_std, "interpoint_std");
    emit(run.norm_std, "norm_std");
    emit(run.gap_ratio, "gap_ratio");
    emit(run.survival_stat, "survival_stat");
    emit(run.z_samples, "z_alpha");
  }
}

inline Json parse_json(const std::string& text, const char* what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError(std::string("malformed JSON for ") + what);
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure: " + path);
  return text;
}

}  // namespace maxdist
