#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "polya/error.hpp"
#include "polya/geometry.hpp"

using namespace polya;
using namespace polya::geometry;

TEST_SUITE("geometry") {

TEST_CASE("equilateral data") {
  const auto d = derive({0.5, std::sqrt(3.0) / 2});
  CHECK(d.M == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.N == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.alpha == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(d.beta == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(d.gamma == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(d.area == doctest::Approx(std::sqrt(3.0) / 4));
  CHECK(d.perimeter == doctest::Approx(3.0));
  CHECK(d.inradius == doctest::Approx(std::sqrt(3.0) / 6));
  CHECK(classify({0.5, std::sqrt(3.0) / 2}) == TriangleClass::Equilateral);
}

TEST_CASE("right triangle at the origin") {
  const auto d = derive({0.0, 1.0});
  CHECK(d.M == doctest::Approx(1.0));
  CHECK(d.N == doctest::Approx(std::sqrt(2.0)));
  CHECK(d.alpha == doctest::Approx(kPi / 2));
  CHECK(d.gamma == doctest::Approx(kPi / 4));
  CHECK(classify({0.0, 1.0}) == TriangleClass::Right);
}

TEST_CASE("isosceles apex angle") {
  for (double b : {0.05, 0.3, 1.0, 4.0}) {
    CHECK(derive({0.5, b}).gamma == doctest::Approx(2 * std::atan(1 / (2 * b))).epsilon(1e-12));
  }
}

TEST_CASE("angles sum to pi") {
  for (double a : {-0.3, 0.0, 0.2, 0.5, 0.9, 1.4}) {
    for (double b : {0.01, 0.4, 2.0}) {
      const auto d = derive({a, b});
      CHECK(d.alpha + d.beta + d.gamma == doctest::Approx(kPi).epsilon(1e-12));
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify({0.2, 0.2}) == TriangleClass::Obtuse);
  CHECK(classify({0.5, 0.3}) == TriangleClass::IsoscelesObtuse);
  CHECK(classify({0.3, 0.8}) == TriangleClass::Acute);
  CHECK(classify({0.5, 2.0}) == TriangleClass::IsoscelesAcute);
}

TEST_CASE("degenerate input") {
  CHECK_THROWS_AS(derive({0.3, 0.0}), Error);
  CHECK_THROWS_AS(classify({0.3, 0.0}), Error);
  CHECK(classify({2.0, 1e-12}) == TriangleClass::Degenerate);
}

TEST_CASE("region membership") {
  CHECK(in_region(0.5, std::sqrt(3.0) / 2, RegionId::T));
  CHECK(in_region(0.3, 0.1, RegionId::ObtuseCase2));
  CHECK(obtuse_case2_upper(0.3) == doctest::Approx(0.42 / 0.79));
  CHECK_FALSE(in_region(0.2, 0.45, RegionId::TObtuse));
  CHECK(in_region(0.2, 0.35, RegionId::TObtuse));
  CHECK_THROWS_AS(region_from_string("nowhere"), Error);
}

TEST_CASE("obtuse case 1 starts at a_min") {
  const double a0 = obtuse_case1_a_min();
  CHECK(a0 > 0.0934);
  CHECK(a0 < 0.0935);
  CHECK(obtuse_case1_lower(a0) == doctest::Approx(std::sqrt(a0 - a0 * a0)).epsilon(1e-10));
}

TEST_CASE("charts agree on the shape") {
  const Triangle t{0.3, 0.6};
  const Triangle s = to_chart(t, Chart::ShortestUnit);
  const auto dt = derive(t), ds = derive(s);
  // Same angles as a multiset, so the same similarity class.
  std::array<double, 3> x{dt.alpha, dt.beta, dt.gamma}, y{ds.alpha, ds.beta, ds.gamma};
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (int i = 0; i < 3; ++i) CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-12));
  const Triangle back = to_chart(s, Chart::LongestUnit);
  CHECK(back.a == doctest::Approx(t.a).epsilon(1e-12));
  CHECK(back.b == doctest::Approx(t.b).epsilon(1e-12));
}

TEST_CASE("kites are tangential") {
  for (double t : {0.2, 0.5, 0.8}) {
    for (double w : {0.1, 0.6}) {
      const auto k = make_kite(t, w);
      CHECK(is_tangential_quadrilateral(k));
      CHECK(tangential_inradius(k) == doctest::Approx(2 * k.area() / k.perimeter()));
    }
  }
  ConvexPolygon rect{{{0, 0}, {2, 0}, {2, 1}, {0, 1}}};
  CHECK_FALSE(is_tangential_quadrilateral(rect));
}

}
