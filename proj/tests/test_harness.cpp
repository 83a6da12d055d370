#include <doctest.h>

#include <cmath>

#include "polya/error.hpp"
#include "polya/harness.hpp"

using namespace polya;
using namespace polya::harness;
using geometry::kPi;

TEST_SUITE("harness") {

TEST_CASE("g at the corner is exact") {
  CHECK(case_function_exact("g", Rational(1, 2), Rational(29, 10)) == Rational(501126, 495785));
  CHECK(case_function("g", 0.5, 2.9) == doctest::Approx(501126.0 / 495785.0).epsilon(1e-14));
}

TEST_CASE("case functions respect their regions") {
  CHECK_THROWS_AS(case_function("g", 0.5, 3.5), Error);
  CHECK_THROWS_AS(case_function("f_acute_1b", 0.01), Error);
  CHECK_THROWS_AS(case_function("nope", 0.1), Error);
  CHECK_THROWS_AS(case_function_exact("f_mgeq3", 3, 0), Error);
  try {
    case_function("f_obtuse_2", 0.2, 0.45);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRegion);
  }
}

TEST_CASE("obtuse case 1 at least 1 on its upper curve") {
  for (double a = 0.1; a <= 0.5; a += 0.05) {
    CHECK(case_function("f_obtuse_1", a, std::sqrt(a - a * a)) >= 1.0);
  }
}

TEST_CASE("obtuse case 2 equals 1 on its curve") {
  for (int k = 1; k <= 8; ++k) {
    const Rational a(k, 40);
    Rational b = 2 * a * (1 - a) / (1 - a + a * a);
    b.canonicalize();
    CHECK(case_function_exact("f_obtuse_2", a, b) == 1);
  }
}

TEST_CASE("obtuse case 3 prefactor") {
  CHECK(case_function("prefactor_obtuse_3", 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  double prev = 0;
  for (double b = 0; b <= 0.5; b += 0.01) {
    const double v = case_function("prefactor_obtuse_3", b);
    CHECK(v >= prev);
    CHECK(v >= 1 - 1e-12);
    prev = v;
  }
}

TEST_CASE("context plumbing") {
  const auto c = make_context(geometry::Chart::LongestUnit, 0.2, 0.3);
  REQUIRE(c.x_b.has_value());
  CHECK(*c.a_b == doctest::Approx(0.1));
  CHECK(*c.x_b == doctest::Approx(3.0));
  CHECK(*make_context(geometry::Chart::LongestUnit, 0.2, 0.2).x_b >= 3);
  CHECK(*make_context(geometry::Chart::LongestUnit, 0.2, 0.4).x_b < 3);
  CHECK_FALSE(make_context(geometry::Chart::ShortestUnit, 0.2, 2.0).a_b.has_value());
  CHECK(*make_context(geometry::Chart::ShortestUnit, 0.2, 2.0).gamma_b == doctest::Approx(std::atan(0.5)));
}

TEST_CASE("verdict rules") {
  Evidence exact{"e", Method::ExactRational, 0, true, {}};
  Evidence cert{"c", Method::Certificate, 0, true, {}};
  Evidence grid{"g", Method::GridModulus, 0, true, {}};
  CHECK(derive_verdict({exact, cert}) == Verdict::Verified);
  CHECK(derive_verdict({exact, grid}) == Verdict::VerifiedNumerically);
  Evidence broken = exact;
  broken.passed = false;
  CHECK(derive_verdict({broken, cert}) == Verdict::Failed);
  CaseReport r{"x", "r", {cert, broken}, Verdict::Verified, {}, {}};
  finalize(r);
  CHECK(r.verdict == Verdict::Failed);
  CHECK(r.witness == "e");
}

TEST_CASE("replay of exact cases") {
  CHECK(case_ids().size() == 10);
  for (auto id : {"acute-1b", "obtuse-1", "obtuse-2", "rect-monotone"}) {
    const auto r = replay_case(id);
    CHECK_MESSAGE(r.verdict == Verdict::Verified, id);
  }
  const auto b = replay_case("acute-1b");
  bool has_depth = false;
  for (const auto& e : b.evidence) has_depth = has_depth || e.detail.find("depth") != std::string::npos;
  CHECK(has_depth);
  CHECK_THROWS_AS(replay_case("acute-3"), Error);
}

TEST_CASE("replay of numerical cases") {
  for (auto id : {"acute-1a", "acute-2", "obtuse-3"}) {
    CHECK_MESSAGE(replay_case(id).verdict == Verdict::VerifiedNumerically, id);
  }
  ReplayOptions small;
  small.upper_samples = 40;
  small.upper_level = 4;
  CHECK(replay_case("upper-triangle", small).verdict == Verdict::VerifiedNumerically);
  CHECK(replay_case("upper-tangential", small).verdict == Verdict::VerifiedNumerically);
}

TEST_CASE("obtuse case 3 flags the region discrepancy") {
  const auto r = replay_case("obtuse-3");
  REQUIRE(!r.notes.empty());
  CHECK(r.notes.front().find("intersection") != std::string::npos);
}

TEST_CASE("sweep rows") {
  const auto eq = sweep_row(0.5, std::sqrt(3.0) / 2, 7);
  CHECK(eq.ok());
  CHECK(eq.F == doctest::Approx(kPi * kPi / 15).epsilon(1e-4));
  CHECK(eq.margin_low == doctest::Approx(0.2468).epsilon(1e-3));
  CHECK(eq.margin_high == doctest::Approx(0.1645).epsilon(1e-3));
  CHECK(eq.cls == "Equilateral");
  for (const auto& g : eq.lower_bounds) CHECK(g.gap <= 1e-3);
  CHECK(eq.upper_chain.gap >= -1e-3);

  const auto thin = sweep_row(0.5, 0.05, 7);
  CHECK(thin.ok());
  CHECK(thin.F > kPi * kPi / 24);
  // Independent P2 value 0.481217; level 7 sits slightly above it.
  CHECK(thin.F == doctest::Approx(0.4843).epsilon(2e-3));

  const auto bad = sweep_row(0.3, 1e-8, 5);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.error.empty());
}

TEST_CASE("sweep grid and CSV") {
  SweepConfig c;
  c.na = 4;
  c.nb = 3;
  c.b_min = 0.1;
  c.max_level = 4;
  const auto pts = sweep_points(c);
  for (auto [a, b] : pts) CHECK(geometry::in_region(a, b, geometry::RegionId::T));
  const auto rows = sweep_triangles(c);
  REQUIRE(rows.size() == pts.size());
  const auto csv = sweep_csv(rows);
  CHECK(csv.rfind("a,b,class,lambda1,T,torsion_max,F,margin_low,margin_high\n", 0) == 0);
  CHECK(csv == sweep_csv(sweep_triangles(c)));
  const auto s = summarize(rows);
  CHECK(s.rows == rows.size());
  CHECK(s.enclosure_violations == 0);
  c.b_min = 1e-4;
  CHECK_THROWS_AS(sweep_points(c), Error);
}

TEST_CASE("rectangle scan") {
  std::vector<double> a;
  for (int i = 1; i <= 10; ++i) a.push_back(i);
  const auto s = rect_monotonicity_scan(a);
  CHECK(s.nondecreasing);
  CHECK(s.first_is_min);
  CHECK(s.above_floor);
  CHECK(s.F.front() == doctest::Approx(0.69372).epsilon(1e-5));
  CHECK(s.last_gap > 0);
}

TEST_CASE("G remark") {
  const auto g = g_remark_check();
  CHECK(g.square_above_145);
  CHECK(g.G_square >= 0.5 * kPi * kPi * 0.294);
  CHECK(g.a_threshold == doctest::Approx(2.3883).epsilon(1e-4));
  CHECK(g.tail_holds);
  CHECK(g.square_is_max);
  CHECK(kPi * kPi / 8 * (1 + 1.0 / 9) <= 1.45);
}

}
