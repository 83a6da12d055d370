#include <doctest.h>

#include <cmath>

#include "polya/bounds.hpp"
#include "polya/closed_forms.hpp"
#include "polya/error.hpp"
#include "polya/fem.hpp"

using namespace polya;
using namespace polya::bounds;
using geometry::kPi;

namespace {
double fem_T(double a, double b) { return fem::spectral(geometry::Triangle{a, b}, 6).T; }
}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("equilateral test function") {
  CHECK(torsion_lb_equilateral_test(0.5, std::sqrt(3.0) / 2).value == doctest::Approx(std::sqrt(3.0) / 320).epsilon(1e-14));
  CHECK(torsion_lb_equilateral_test(0.2, 0.7).value == doctest::Approx(torsion_lb_equilateral_test(0.8, 0.7).value).epsilon(1e-14));
  CHECK(torsion_lb_equilateral_test(Rational(1, 5), Rational(7, 10)) == torsion_lb_equilateral_test(Rational(4, 5), Rational(7, 10)));
  CHECK(torsion_lb_equilateral_test(0.3, 0.4).value <= fem_T(0.3, 0.4));
}

TEST_CASE("obtuse test function") {
  CHECK(torsion_lb_obtuse_test(0.3, 0.2).value == doctest::Approx(torsion_lb_obtuse_test(0.7, 0.2).value).epsilon(1e-14));
  CHECK(torsion_lb_obtuse_test(1e-9, 0.2).value < 1e-9);
  CHECK(torsion_lb_obtuse_test(0.3, 0.2).value <= fem_T(0.3, 0.2));
  CHECK_THROWS_AS(torsion_lb_obtuse_test(0.0, 0.2), Error);
  CHECK_THROWS_AS(torsion_lb_obtuse_test(Rational(1), Rational(1, 5)), Error);
}

TEST_CASE("sector eigenvalue bound") {
  for (double t : {0.1, 0.3, 0.7}) {
    CHECK(eig_lb_sector_minorized(t, 1.0).value <= eig_lb_sector(t, 1.0).value);
  }
  // Right isosceles triangle (0,1): smallest angle pi/4, b = 1.
  const double lam = fem::spectral(geometry::Triangle{0.0, 1.0}, 6).lambda1;
  CHECK(lam == doctest::Approx(5 * kPi * kPi).epsilon(1e-3));
  CHECK(eig_lb_sector(kPi / 4, 1.0).value <= lam);
  CHECK(eig_lb_sector(1e-3, 1.0).value > kPi * kPi / 1e-3);
}

TEST_CASE("diameter-height bound") {
  CHECK(eig_lb_diameter_height(1, 0.25).value == doctest::Approx(kPi * kPi * 25));
  CHECK(eig_lb_diameter_height(2, 2).value == doctest::Approx(kPi * kPi));
  const double eq = eig_lb_diameter_height(1, std::sqrt(3.0) / 2).value;
  CHECK(eq == doctest::Approx(45.822).epsilon(1e-4));
  CHECK(eq <= 16 * kPi * kPi / 3);
}

TEST_CASE("closed sector torsion bound") {
  CHECK(torsion_lb_sector_closed(1, 1e-4, 0).value > 0);
  CHECK(torsion_lb_sector_closed(1, 1e-4, 0).value < 1e-12);
  for (double g : {0.1, 0.3, kPi / 4}) {
    CHECK(torsion_lb_sector_closed(1, g, 0).value <= closed_forms::sector_torsion({g, 1}).value);
  }
  CHECK_THROWS_AS(torsion_lb_sector_closed(1, 1.0, 1.5), Error);
  CHECK_NOTHROW(torsion_lb_sector_closed(1, 1.0, 2.5));
  // Right triangle (0,3) in the shortest-unit chart; apex angle atan(1/3).
  const double g = std::atan(1.0 / 3.0), M = 3.0, N = std::sqrt(10.0);
  const double h = altitude_iso(M, N);
  const double t = fem::spectral(geometry::Triangle{0.0, 3.0}, 6).T;
  CHECK(torsion_lb_sector_closed(std::min(M, N), g, M).value <= t);
  CHECK(torsion_lb_sector_closed(h, g, M).value > 0);
}

TEST_CASE("isosceles altitude") {
  CHECK(altitude_iso(1, std::sqrt(2.0)) == doctest::Approx(std::cos(kPi / 8)).epsilon(1e-14));
  CHECK(altitude_iso(2.5, 2.5) == doctest::Approx(2.5));
  const double h = altitude_iso(3, std::sqrt(10.0));
  CHECK(h * h == doctest::Approx(4.5 * (1 + 3 / std::sqrt(10.0))));
  CHECK(h >= std::sqrt(8.75));
}

TEST_CASE("upper chain at the equilateral triangle") {
  const auto e = closed_forms::equilateral_exact();
  const auto c = upper_chain({e.lambda1, e.T, std::sqrt(3.0) / 4, 3.0}, DomainKind::Triangle);
  CHECK(c.eigen_factor == doctest::Approx(kPi * kPi / 9).epsilon(1e-14));
  CHECK(c.torsion_factor == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(c.torsion_ok);
  CHECK(c.bound.value == doctest::Approx(2 * kPi * kPi / 27));
  CHECK(e.F < c.bound.value);
}

TEST_CASE("thinning upper bound") {
  CHECK(thinning_upper(std::sqrt(3.0) / 4, 3.0).value == doctest::Approx(1.2996).epsilon(1e-4));
  const double p = 1 + 2 * std::hypot(0.5, 0.05);
  CHECK(thinning_upper(0.025, p).value == doctest::Approx(0.6733).epsilon(1e-4));
  double prev = 1e9;
  for (double b : {0.4, 0.2, 0.1, 0.05, 0.01, 1e-4}) {
    const double v = thinning_upper(b / 2, 1 + 2 * std::hypot(0.5, b)).value;
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev == doctest::Approx(kPi * kPi / 24).epsilon(1e-2));
}

TEST_CASE("auxiliary functionals") {
  const auto e = closed_forms::equilateral_exact();
  const double r = std::sqrt(3.0) / 6;
  const auto f = aux_functionals(e.lambda1, e.T, 1.0 / 36, std::sqrt(3.0) / 4, r);
  CHECK(f.Psi == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(f.Psi >= 0.125);
  CHECK(f.Phi >= 0.25);
  CHECK(f.hersch_protter >= kPi * kPi / 4);
  CHECK(f.payne >= kPi * kPi / 8);
  for (auto [a, b] : {std::pair{0.2, 0.3}, std::pair{0.4, 0.1}, std::pair{0.1, 0.6}}) {
    const auto s = fem::spectral(geometry::Triangle{a, b}, 6);
    const auto d = geometry::derive({a, b});
    const auto g = aux_functionals(s.lambda1, s.T, s.torsion_max, d.area, d.inradius);
    CHECK(g.Phi >= 0.25);
    CHECK(g.hersch_protter >= kPi * kPi / 4);
    CHECK(g.payne >= kPi * kPi / 8);
  }
}

}
