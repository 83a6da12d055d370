#include <doctest.h>

#include <json.hpp>

#include "polya/config.hpp"
#include "polya/error.hpp"
#include "polya/report.hpp"

using namespace polya;

TEST_SUITE("report_config") {

TEST_CASE("config parsing") {
  const auto c = config::parse("# demo\n[sweep]\ngrid = 12x7\nbmin = 0.05\nlevel = \"6\"\nthreads=2\n");
  CHECK(*c.na == 12);
  CHECK(*c.nb == 7);
  CHECK(*c.b_min == doctest::Approx(0.05));
  CHECK(*c.level == 6);
  harness::SweepConfig s;
  config::apply(c, s);
  CHECK(s.na == 12);
  CHECK(s.max_level == 6);
  CHECK(s.threads == 2);
  CHECK(s.b_max == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(config::parse("grid = 12\n"), Error);
  CHECK_THROWS_AS(config::parse("level = seven\n"), Error);
  CHECK_THROWS_AS(config::parse("colour = red\n"), Error);
  CHECK_THROWS_AS(config::parse("just words\n"), Error);
  CHECK_THROWS_AS(config::load("/nonexistent/polya.conf"), Error);
  CHECK(config::parse_grid("60x60") == std::pair{60, 60});
}

TEST_CASE("case report JSON") {
  harness::CaseReport r{"demo", "nowhere", {{"c", harness::Method::Oracle, std::nan(""), true, "d"}}, harness::Verdict::Failed, {"n"}, {}};
  harness::finalize(r);
  const auto j = nlohmann::json::parse(report::to_json(r));
  CHECK(j["verdict"] == "VerifiedNumerically");
  CHECK(j["evidence"][0]["method"] == "oracle");
  CHECK(j["evidence"][0]["worst_margin"].is_null());
  CHECK(j["witness"].is_null());
}

TEST_CASE("rectangle JSON") {
  const auto j = nlohmann::json::parse(report::rect_json({1, 1}, 32));
  CHECK(j["lambda1"].get<double>() == doctest::Approx(geometry::kPi * geometry::kPi / 2));
  CHECK(j["F"]["value"].get<double>() == doctest::Approx(0.69372).epsilon(1e-5));
  CHECK_FALSE(j.contains("fem"));
}

TEST_CASE("reports are deterministic") {
  const auto a = report::to_json(harness::replay_case("obtuse-1"));
  const auto b = report::to_json(harness::replay_case("obtuse-1"));
  CHECK(a == b);
  const auto s = report::to_json(fem::spectral(geometry::Triangle{0.4, 0.5}, 5));
  CHECK(s == report::to_json(fem::spectral(geometry::Triangle{0.4, 0.5}, 5)));
}

}
