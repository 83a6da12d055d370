#include <doctest.h>

#include <cmath>
#include <sstream>

#include "polya/closed_forms.hpp"
#include "polya/error.hpp"
#include "polya/fem.hpp"

using namespace polya;
using namespace polya::fem;
using geometry::kPi;

TEST_SUITE("fem") {

TEST_CASE("mesh counts") {
  const Shape tri = geometry::Triangle{0.3, 0.5};
  CHECK(mesh_domain(tri, 0).elements.size() == 1);
  CHECK(mesh_domain(tri, 0).vertices.size() == 3);
  CHECK(mesh_domain(tri, 3).elements.size() == 64);
  CHECK(mesh_domain(tri, 3).vertices.size() == 45);
  CHECK(mesh_domain(geometry::Rectangle{1, 1}, 2).elements.size() == 32);
  const Mesh m = mesh_domain(tri, 2);
  CHECK(m.interior_count() == 3);
  CHECK(m.max_edge() == doctest::Approx(0.25));
}

TEST_CASE("mesh errors") {
  CHECK_THROWS_AS(mesh_domain(geometry::Triangle{0.3, 1e-8}, 2), Error);
  CHECK_THROWS_AS(mesh_domain(geometry::Triangle{0.3, 0.5}, 10), Error);
  CHECK_THROWS_AS(spectral(geometry::Triangle{0.3, 0.5}, 10), Error);
  CHECK_THROWS_AS(mesh_domain(geometry::Rectangle{0, 1}, 1), Error);
  CHECK_THROWS_AS(mesh_domain(geometry::ConvexPolygon{{{0, 0}, {0, 1}, {1, 0}}}, 1), Error);
  try {
    mesh_domain(geometry::Triangle{0.3, 0.5}, 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LevelTooHigh);
  }
}

TEST_CASE("sector mesh follows the arc") {
  const geometry::Sector s{kPi / 3, 1.0};
  const Mesh m = mesh_domain(s, 3);
  double area = 0;
  for (const auto& e : m.elements) {
    const auto &p = m.vertices[e[0]], &q = m.vertices[e[1]], &r = m.vertices[e[2]];
    area += 0.5 * ((q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y));
  }
  CHECK(area == doctest::Approx(s.area()).epsilon(1e-5));
}

TEST_CASE("OFF export") {
  std::ostringstream os;
  write_off(os, mesh_domain(geometry::Triangle{0.5, 0.5}, 1));
  CHECK(os.str().rfind("OFF\n6 4 0\n", 0) == 0);
}

TEST_CASE("prolongation reproduces linear functions inside and zeroes the boundary") {
  const Shape s = geometry::Triangle{0.2, 0.7};
  const Mesh coarse = mesh_domain(s, 2);
  const Mesh fine = refine(coarse, s);
  std::vector<double> v;
  for (const auto& p : coarse.vertices) v.push_back(1 + 2 * p.x - 3 * p.y);
  const auto w = prolongate(fine, v);
  for (std::size_t i = 0; i < fine.vertices.size(); ++i) {
    if (fine.boundary[i]) {
      CHECK(w[i] == 0.0);
    } else {
      CHECK(w[i] == doctest::Approx(1 + 2 * fine.vertices[i].x - 3 * fine.vertices[i].y).epsilon(1e-13));
    }
  }
}

TEST_CASE("Richardson extrapolation") {
  const auto r = richardson({1 + 1.0, 1 + 0.25, 1 + 0.0625});
  CHECK(r.estimate == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.observed_order == doctest::Approx(2.0).epsilon(1e-12));
  const auto c = richardson({3.5, 3.5, 3.5});
  CHECK(c.estimate == 3.5);
  CHECK(c.error_gauge == 0.0);
  CHECK_THROWS_AS(richardson({1.0, 1.1, 1.3}), Error);
}

TEST_CASE("equilateral triangle") {
  const auto e = closed_forms::equilateral_exact();
  const auto r = spectral(geometry::Triangle{0.5, std::sqrt(3.0) / 2}, 7);
  CHECK(r.lambda1 == doctest::Approx(e.lambda1).epsilon(5e-3));
  CHECK(r.T == doctest::Approx(e.T).epsilon(5e-3));
  CHECK(r.F == doctest::Approx(e.F).epsilon(1e-2));
  // Frozen at build time; far inside the required tolerances.
  CHECK(r.lambda1 == doctest::Approx(e.lambda1).epsilon(1e-6));
  CHECK(r.F == doctest::Approx(e.F).epsilon(1e-6));
  for (double l : r.lambda_levels) CHECK(l >= r.lambda1);
}

TEST_CASE("unit square") {
  const auto r = spectral(geometry::Rectangle{0.5, 0.5}, 7);
  CHECK(r.lambda1 == doctest::Approx(2 * kPi * kPi).epsilon(2e-3));
  CHECK(std::abs(r.T - 0.035144) <= 2e-4);
  const auto series = closed_forms::rect_F({0.5, 0.5});
  CHECK(r.F == doctest::Approx(series.value).epsilon(1e-2));
  for (double l : r.lambda_levels) CHECK(l >= r.lambda1);
}

TEST_CASE("observed order on the square") {
  std::array<double, 3> lam{};
  Mesh m = mesh_domain(geometry::Rectangle{0.5, 0.5}, 4);
  for (int k = 0; k < 3; ++k) {
    lam[k] = solve_lambda1(m).lambda1;
    if (k < 2) m = refine(m, geometry::Rectangle{0.5, 0.5});
  }
  const auto r = richardson(lam);
  CHECK(r.observed_order >= 1.8);
  CHECK(r.observed_order <= 2.2);
}

TEST_CASE("torsion increments shrink") {
  const auto r = spectral(geometry::Triangle{0.3, 0.4}, 6);
  REQUIRE(r.T_levels.size() == 3);
  CHECK(std::abs(r.T_levels[2] - r.T_levels[1]) < std::abs(r.T_levels[1] - r.T_levels[0]));
}

TEST_CASE("dilation invariance") {
  const geometry::ConvexPolygon big{{{0, 0}, {2, 0}, {0.6, 0.8}}};
  const auto a = spectral(big, 6);
  const auto b = spectral(geometry::Triangle{0.3, 0.4}, 6);
  CHECK(std::abs(a.F - b.F) <= 1e-10);
  CHECK(a.lambda1 * 4 == doctest::Approx(b.lambda1).epsilon(1e-10));
}

TEST_CASE("thin isosceles triangle") {
  // Independent P2 computation on the half triangle gives 0.4812166.
  const auto r = spectral(geometry::Triangle{0.5, 0.05}, 9);
  CHECK(r.F > kPi * kPi / 24);
  CHECK(r.F == doctest::Approx(0.4812166).epsilon(2e-4));
}

TEST_CASE("solver warm start agrees with a cold solve") {
  const Shape s = geometry::Triangle{0.4, 0.3};
  const Mesh coarse = mesh_domain(s, 3);
  const Mesh fine = refine(coarse, s);
  const auto ec = solve_lambda1(coarse);
  std::vector<std::vector<double>> warm;
  const auto tc = solve_torsion(coarse);
  warm.push_back(prolongate(fine, tc.nodal));
  const auto cold = solve_lambda1(fine);
  const auto hot = solve_lambda1(fine, &warm);
  CHECK(hot.lambda1 == doctest::Approx(cold.lambda1).epsilon(1e-10));
  CHECK(ec.lambda1 >= cold.lambda1);
}

TEST_CASE("thread budget honours the environment") {
  setenv("POLYA_VERIFY_THREADS", "3", 1);
  CHECK(thread_budget() == 3);
  unsetenv("POLYA_VERIFY_THREADS");
  CHECK(thread_budget() >= 1);
}

}
