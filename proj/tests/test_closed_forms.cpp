#include <doctest.h>

#include <cmath>

#include "polya/closed_forms.hpp"
#include "polya/error.hpp"

using namespace polya;
using namespace polya::closed_forms;
using geometry::kPi;
using geometry::Rectangle;

TEST_SUITE("closed_forms") {

TEST_CASE("equilateral values") {
  const auto e = equilateral_exact();
  CHECK(e.T == doctest::Approx(std::sqrt(3.0) / 320).epsilon(1e-15));
  CHECK(e.lambda1 == doctest::Approx(16 * kPi * kPi / 3).epsilon(1e-15));
  CHECK(e.F == doctest::Approx(kPi * kPi / 15).epsilon(1e-14));
}

TEST_CASE("equilateral fields") {
  CHECK(equilateral_fields(0, 0).u == doctest::Approx(0.0));
  CHECK(equilateral_fields(0, 0).phi == doctest::Approx(0.0));
  CHECK(equilateral_fields(0.5, std::sqrt(3.0) / 6).u == doctest::Approx(1.0 / 36).epsilon(1e-14));
  // Vanishes on the edge x = 1/2 + t/2, y = sqrt3 (1 - t)/2.
  CHECK(std::abs(equilateral_fields(0.75, std::sqrt(3.0) / 4).u) < 1e-15);
  // Midpoint rule on a fine grid of sub-triangles reproduces T(E).
  const int n = 400;
  const double h = 1.0 / n, r3 = std::sqrt(3.0);
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      // Upward cell centroid and, when present, the downward one.
      auto at = [&](double s, double t) { return equilateral_fields(s + 0.5 * t, 0.5 * r3 * t).u; };
      sum += at((i + 1.0 / 3) * h, (j + 1.0 / 3) * h);
      if (i + j + 1 < n) sum += at((i + 2.0 / 3) * h, (j + 2.0 / 3) * h);
    }
  }
  const double cell = r3 / 4 * h * h;
  CHECK(sum * cell == doctest::Approx(r3 / 320).epsilon(1e-5));
}

TEST_CASE("Bessel zeros") {
  CHECK(bessel_first_zero(0) == doctest::Approx(2.404825557695773).epsilon(1e-11));
  CHECK(bessel_first_zero(1) == doctest::Approx(3.831705970207512).epsilon(1e-11));
  CHECK(bessel_first_zero(4) == doctest::Approx(7.588342434503804).epsilon(1e-11));
  CHECK(std::abs(bessel_j(2.5, bessel_first_zero(2.5))) < 1e-11);
}

TEST_CASE("Bessel zero lower bound, nu = 1..20") {
  const double c = 2.338107 / std::cbrt(2.0);
  for (int nu = 1; nu <= 20; ++nu) {
    CHECK(bessel_first_zero(nu) > nu + c * std::cbrt(static_cast<double>(nu)));
  }
}

TEST_CASE("rectangle eigenvalue") {
  const double s = std::sqrt(2.0) / 2;
  CHECK(rect_lambda1({s, s}) == doctest::Approx(kPi * kPi).epsilon(1e-14));
  CHECK(rect_lambda1({1, 1}) == doctest::Approx(kPi * kPi / 2).epsilon(1e-14));
  CHECK(rect_lambda1({1e8, 1}) == doctest::Approx(kPi * kPi / 4).epsilon(1e-12));
}

TEST_CASE("rectangle torsion") {
  // Unit square (half-widths 1/2): 0.03514425373878843 from the tanh single sum.
  const double unit = 0.03514425373878843;
  const auto t = rect_torsion({0.5, 0.5});
  CHECK(std::abs(t.value - unit) <= t.tail_bound);
  CHECK(std::abs(rect_torsion({0.5, 0.5}, 256).value - unit) <= 1e-9);
  // Half-widths (1,1) scale by 16.
  CHECK(rect_torsion({1, 1}).value == doctest::Approx(16 * t.value).epsilon(1e-13));
  CHECK(rect_torsion({2, 1}).value == doctest::Approx(rect_torsion({1, 2}).value).epsilon(1e-14));
  for (double a : {1.0, 2.0, 5.0}) {
    const double t = rect_torsion({a, 1}).value;
    CHECK(t >= a * a * a / (a * a + 1));
    CHECK(t <= 4 * a * a * a / (3 * (a * a + 1)));
  }
}

TEST_CASE("double and single sums agree") {
  for (auto r : {Rectangle{1, 1}, Rectangle{3, 1}, Rectangle{0.4, 1.7}}) {
    const auto d = rect_torsion(r, 256), s = rect_torsion_single_sum(r);
    CHECK(std::abs(d.value - s.value) <= d.tail_bound + s.tail_bound + 1e-12);
    CHECK(d.tail_bound < 1e-6 * d.value);
  }
}

TEST_CASE("rectangle F") {
  const auto f = rect_F({1, 1});
  CHECK(std::abs(f.value - 0.6937197627466948) <= f.tail_bound);
  const double floor = 64 / std::pow(kPi, 4);
  for (double a : {0.1, 0.5, 1.0, 3.3, 40.0}) {
    for (double b : {0.2, 1.0, 7.0}) CHECK(rect_F({a, b}).value >= floor);
  }
}

TEST_CASE("center exit time") {
  const double s = std::sqrt(2.0) / 2;
  CHECK(2 * rect_center_torsion({s, s}).value == doctest::Approx(0.294685).epsilon(1e-5 / 0.294685));
  const auto c = rect_center_torsion({s, s});
  CHECK(std::abs(c.value - rect_center_torsion_strip({s, s}).value) <= c.tail_bound);
  CHECK(rect_center_torsion({2, 2}).value == doctest::Approx(4 * rect_center_torsion({1, 1}).value).epsilon(1e-12));
  CHECK(2 * rect_center_torsion_strip({1e6, 1}).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sector torsion") {
  CHECK(sector_torsion({1e-3, 1}).value < 1e-9);
  const double z5 = 1.0369277551433699;
  for (double g : {0.1, 0.3, kPi / 4}) {
    const auto v = sector_torsion({g, 1});
    CHECK(v.value >= (std::tan(g) - g - 124 * z5 * std::pow(g, 4) / std::pow(kPi, 5)) / 16);
    CHECK(sector_torsion({g, 2}).value == doctest::Approx(16 * v.value).epsilon(1e-12));
  }
  CHECK_THROWS_AS(sector_torsion({kPi / 2, 1}), Error);
}

}
