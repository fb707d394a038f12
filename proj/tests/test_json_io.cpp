#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "maxdist/json_io.hpp"
#include "maxdist/verify.hpp"

using namespace maxdist;

TEST_CASE("model json round trip") {
  const char* specs[] = {
      R"({"family":"gamma_tail","d":2,"alpha":0.0,"beta":0.5,"gamma":2.0})",
      R"({"family":"kotz","d":3,"kappa":1.5,"b":2.0})",
      R"({"family":"bounded","d":2,"kind":"uniform-ball"})",
      R"({"family":"bounded","d":4,"kind":"uniform-sphere"})",
      R"({"family":"bounded","d":2,"kind":"pure-weibull-radius","alpha_w":2.5})",
      R"({"family":"power_law","d":2,"alpha_f":3.0,"c_f":1.0})",
  };
  for (const char* spec : specs) {
    const SphericalModel model = model_from_json(parse_json(spec, "model"));
    const SphericalModel again = model_from_json(model_to_json(model));
    CHECK(model_to_json(model) == model_to_json(again));
    // tail probabilities agree on a grid after the round trip
    for (double x = 0.0; x <= 3.0; x += 0.5) {
      CHECK(tail_probability(model, x) == tail_probability(again, x));
    }
  }
}

TEST_CASE("bounded kind defaults") {
  const auto ball = std::get<BoundedTail>(
      model_from_json(parse_json(R"({"family":"bounded","d":3,"kind":"uniform-ball"})", "m")));
  CHECK(ball.alpha_w == 1.0);
  CHECK(ball.c_w == 3.0);
  const auto sphere = std::get<BoundedTail>(
      model_from_json(parse_json(R"({"family":"bounded","d":3,"kind":"uniform-sphere"})", "m")));
  CHECK(sphere.alpha_w == 0.0);
  CHECK(sphere.c_w == 1.0);
}

TEST_CASE("malformed model json rejected") {
  CHECK_THROWS_AS(model_from_json(parse_json(R"({"family":"nope","d":2})", "m")), ConfigError);
  CHECK_THROWS_AS(model_from_json(parse_json(R"({"family":"gamma_tail","d":2})", "m")),
                  ConfigError);
  CHECK_THROWS_AS(model_from_json(parse_json(R"({"family":"gamma_tail","d":0,
      "alpha":0,"beta":1,"gamma":1})", "m")), ConfigError);
  CHECK_THROWS_AS(parse_json("{not json", "m"), ConfigError);
  CHECK_THROWS_AS(
      model_from_json(parse_json(R"({"family":"bounded","d":2,"kind":"octahedron"})", "m")),
      ConfigError);
}

TEST_CASE("law json") {
  CHECK(std::holds_alternative<Gumbel>(law_from_json(parse_json(R"({"law":"gumbel"})", "l"))));
  const LimitLaw w = law_from_json(parse_json(R"({"law":"neg_weibull","alpha":2.5})", "l"));
  CHECK(std::get<NegWeibull>(w).alpha == 2.5);
  CHECK(law_to_json(w)["alpha"] == 2.5);
  CHECK_THROWS_AS(law_from_json(parse_json(R"({"law":"neg_weibull"})", "l")), ConfigError);
  CHECK_THROWS_AS(law_from_json(parse_json(R"({"law":"cauchy"})", "l")), ConfigError);
}

TEST_CASE("experiment config json") {
  const Json j = parse_json(R"({
    "experiment": "gumbel",
    "model": {"family":"gamma_tail","d":2,"alpha":0,"beta":0.5,"gamma":2},
    "n_values": [100, 1000],
    "replications": 7,
    "seed": 99,
    "lambda": 0.5,
    "statistic": "both"
  })", "config");
  const ExperimentConfig cfg = config_from_json(j);
  CHECK(cfg.n_values == std::vector<long long>{100, 1000});
  CHECK(cfg.replications == 7);
  CHECK(cfg.seed == 99);
  CHECK(cfg.lambda == 0.5);
  CHECK(cfg.statistic == StatisticSelector::both);
  CHECK_THROWS_AS(config_from_json(parse_json(R"({"model":{"family":"kotz","d":2,
      "kappa":1,"b":1}})", "c")), ConfigError);
}

TEST_CASE("points csv round trip") {
  PointCloud cloud = make_point_cloud(
      2, {1.0, -2.5, 1e-17, 3.14159265358979312, -1e300, 0.1});
  std::ostringstream out;
  write_points_csv(out, cloud);
  std::istringstream in(out.str());
  const PointCloud again = read_points_csv(in);
  REQUIRE(again.size() == cloud.size());
  REQUIRE(again.dim == cloud.dim);
  for (std::size_t i = 0; i < cloud.coords.size(); ++i) {
    CHECK(again.coords[i] == cloud.coords[i]);  // 17 significant digits round-trip
  }
}

TEST_CASE("csv parse errors") {
  std::istringstream ragged("1,2\n3\n");
  CHECK_THROWS_AS(read_points_csv(ragged), ConfigError);
  std::istringstream garbage("1,2\n3,abc\n");
  CHECK_THROWS_AS(read_points_csv(garbage), ConfigError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_points_csv(empty), ConfigError);
}

TEST_CASE("report json shape") {
  ExperimentConfig cfg;
  cfg.model = GammaTail{0.0, 0.5, 2.0, 2};
  cfg.n_values = {200};
  cfg.replications = 60;
  cfg.seed = 5;
  cfg.threads = 2;
  const ExperimentReport report = run_gumbel_experiment(cfg);
  const Json j = report_to_json(report);
  CHECK(j["kind"] == "gumbel");
  REQUIRE(j["runs"].size() == 1);
  CHECK(j["runs"][0]["n"] == 200);
  CHECK(j["runs"][0].contains("ks_interpoint"));
  CHECK_FALSE(j["runs"][0].contains("interpoint_std"));
  const Json with_samples = report_to_json(report, true);
  CHECK(with_samples["runs"][0]["interpoint_std"].size() == 60);

  std::ostringstream csv;
  write_samples_csv(csv, report);
  // header + 3 stat streams x 60 reps
  std::size_t lines = 0;
  for (const char c : csv.str()) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 1 + 3 * 60);
}

TEST_CASE("scorecard json") {
  Scorecard card{"demo", {}};
  card.check_le("alpha", 0.5, 1.0);
  card.check_in("beta", 2.0, 1.0, 3.0);
  card.check_ge("gamma", 0.1, 0.2);
  CHECK_FALSE(card.pass());
  const Json j = scorecard_to_json(card);
  CHECK(j["suite"] == "demo");
  CHECK(j["pass"] == false);
  REQUIRE(j["checks"].size() == 3);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][2]["pass"] == false);
  // deterministic bytes
  CHECK(j.dump() == scorecard_to_json(card).dump());
}
