#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include <json.hpp>

#include "gfrac/config.hpp"
#include "gfrac/expansion_io.hpp"
#include "gfrac/report.hpp"
#include "gfrac/verification.hpp"

using namespace gfrac;

TEST_CASE("17 significant digits") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("expansion JSON round-trip is the identity") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_expansion(rng, static_cast<std::size_t>(1 + i % 3), 1 + i % 8);
    CHECK(expansion_from_json(to_json(f)) == f);
    CHECK(to_json(expansion_from_json(to_json(f))) == to_json(f));
  }
  const auto empty = HermiteExpansion(2);
  CHECK(expansion_from_json(to_json(empty)) == empty);
}

TEST_CASE("expansion files") {
  const auto path = std::filesystem::temp_directory_path() / "gfrac_test_io.json";
  HermiteExpansion f(2);
  f.set(MultiIndex{2, 0}, 1.0);
  f.set(MultiIndex{0, 1}, -0.25);
  write_expansion(path, f);
  CHECK(read_expansion(path) == f);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_expansion(path), ParseError);
}

TEST_CASE("malformed expansions are data errors") {
  CHECK_THROWS_AS(expansion_from_json("{"), ParseError);
  CHECK_THROWS_AS(expansion_from_json("[]"), ParseError);
  CHECK_THROWS_AS(expansion_from_json(R"({"dimension": 0, "terms": []})"), ParseError);
  CHECK_THROWS_AS(expansion_from_json(R"({"dimension": 2, "terms": [{"nu": [1], "c": 1}]})"), ParseError);
  CHECK_THROWS_AS(expansion_from_json(R"({"dimension": 1, "terms": [{"nu": [-1], "c": 1}]})"), ParseError);
  CHECK_THROWS_AS(expansion_from_json(R"({"dimension": 1, "terms": [{"nu": [1], "c": "x"}]})"), ParseError);
  CHECK_THROWS_AS(expansion_from_json(R"({"dimension": 1, "terms": [{"nu": [1], "c": 1}, {"nu": [1], "c": 2}]})"),
                  ParseError);
}

TEST_CASE("report invariants and serialization") {
  VerificationReport r{"unit", {}, {}};
  r.add(agreement_case("b", {{"beta", 0.5}}, 1.0 + 1e-9, 1.0, 1e-8));
  r.add(bound_case("a", {{"note", "x"}}, 2.0, 1.0, 1e-8));
  r.add(finite_case("c", {}, std::numeric_limits<double>::infinity()));
  r.finalize();
  CHECK(r.cases[0].name == "a");
  CHECK(r.summary.total == 3);
  CHECK(r.summary.passed == 1);
  CHECK_FALSE(r.all_passed());
  CHECK(r.cases[1].pass);
  CHECK(r.cases[1].rel_err <= r.cases[1].tolerance);

  const auto doc = nlohmann::json::parse(to_json(r));
  CHECK(doc["suite"] == "unit");
  CHECK(doc["cases"].size() == 3);
  CHECK(doc["cases"][2]["observed"].is_null());
  CHECK(doc["summary"]["passed"] == 1);
  CHECK(doc["summary"].contains("wall_time_seconds"));
  CHECK_FALSE(nlohmann::json::parse(to_json(r, false))["summary"].contains("wall_time_seconds"));

  const auto merged = merge_reports("all", {r});
  CHECK(merged.cases[0].name == "unit/a");
  CHECK(merged.summary.total == 3);
}

TEST_CASE("config parsing and precedence") {
  CliConfig cfg;
  CHECK(cfg.quad_order == 16);
  CHECK(cfg.time_nodes == 400);
  CHECK(cfg.seed == 42);
  cfg.merge_text("# comment\nquad_order = 20\n\ntol=1e-7  # inline\nt_max=30\nseed=7\nreport=out.json\n");
  CHECK(cfg.quad_order == 20);
  CHECK(cfg.tolerance == 1e-7);
  CHECK(cfg.t_max == 30.0);
  CHECK(cfg.seed == 7);
  CHECK(cfg.report_path->string() == "out.json");
  cfg.validate();
  CHECK_THROWS_AS(cfg.merge_text("bogus=1"), ConfigError);
  CHECK_THROWS_AS(cfg.merge_text("quad_order"), ConfigError);
  CHECK_THROWS_AS(cfg.merge_text("quad_order=abc"), ConfigError);
  CliConfig bad;
  bad.time_nodes = 8;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = CliConfig{};
  bad.t_min = 50;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = CliConfig{};
  bad.quad_order = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}
