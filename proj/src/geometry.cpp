#include "polya/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "polya/error.hpp"

namespace polya::geometry {
namespace {

double angle_between(Point u, Point v) {
  double cross = u.x * v.y - u.y * v.x;
  double dot = u.x * v.x + u.y * v.y;
  return std::atan2(std::abs(cross), dot);
}

void require_nondegenerate(const Triangle& tri) {
  if (!(tri.b > 0.0) || !std::isfinite(tri.a) || !std::isfinite(tri.b)) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle apex ordinate must be > 0");
  }
}

bool close(double x, double y, double tol) { return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)}); }

}  // namespace

std::string_view to_string(TriangleClass c) {
  switch (c) {
    case TriangleClass::Equilateral: return "Equilateral";
    case TriangleClass::Acute: return "Acute";
    case TriangleClass::Right: return "Right";
    case TriangleClass::Obtuse: return "Obtuse";
    case TriangleClass::IsoscelesAcute: return "IsoscelesAcute";
    case TriangleClass::IsoscelesObtuse: return "IsoscelesObtuse";
    case TriangleClass::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

TriangleData derive(const Triangle& tri) {
  require_nondegenerate(tri);
  const double a = tri.a;
  const double b = tri.b;
  TriangleData d;
  d.M = std::hypot(a, b);
  d.N = std::hypot(a - 1.0, b);
  // Angles from cross/dot products; arccos loses accuracy for slivers.
  d.alpha = angle_between({1.0, 0.0}, {a, b});
  d.beta = angle_between({-1.0, 0.0}, {a - 1.0, b});
  d.gamma = angle_between({-a, -b}, {1.0 - a, -b});
  d.area = 0.5 * b;
  d.perimeter = 1.0 + d.M + d.N;
  d.diameter = std::max({1.0, d.M, d.N});
  d.height = 2.0 * d.area / d.diameter;
  d.inradius = 2.0 * d.area / d.perimeter;
  return d;
}

TriangleClass classify(const Triangle& tri) {
  const TriangleData d = derive(tri);
  const double largest = std::max({d.alpha, d.beta, d.gamma});
  if (std::abs(largest - kPi) <= kAngleTol) {
    return TriangleClass::Degenerate;
  }
  const double sides[3] = {1.0, d.M, d.N};
  const double rel = 1e-9;
  const bool eq01 = close(sides[0], sides[1], rel);
  const bool eq02 = close(sides[0], sides[2], rel);
  const bool eq12 = close(sides[1], sides[2], rel);
  const bool isosceles = eq01 || eq02 || eq12;
  if (std::abs(largest - kPi / 2) <= kAngleTol) {
    return TriangleClass::Right;
  }
  if (largest > kPi / 2) {
    return isosceles ? TriangleClass::IsoscelesObtuse : TriangleClass::Obtuse;
  }
  if (eq01 && eq02) {
    return TriangleClass::Equilateral;
  }
  return isosceles ? TriangleClass::IsoscelesAcute : TriangleClass::Acute;
}

Triangle triangle_from_sides(double s1, double s2, double s3, Chart chart) {
  std::array<double, 3> s{s1, s2, s3};
  std::sort(s.begin(), s.end());
  if (!(s[0] > 0.0) || s[0] + s[1] <= s[2]) {
    throw Error(ErrorCode::DegenerateTriangle, "side lengths violate the triangle inequality");
  }
  double unit, m, n;
  if (chart == Chart::LongestUnit) {
    unit = s[2];
    m = s[0] / unit;
    n = s[1] / unit;
  } else {
    unit = s[0];
    m = s[1] / unit;
    n = s[2] / unit;
  }
  // Apex (a,b) with |(a,b)| = m, |(a-1,b)| = n.
  const double a = 0.5 * (1.0 + m * m - n * n);
  const double b2 = m * m - a * a;
  if (!(b2 > 0.0)) {
    throw Error(ErrorCode::DegenerateTriangle, "collapsed triangle");
  }
  return {a, std::sqrt(b2)};
}

Triangle to_chart(const Triangle& tri, Chart chart) {
  const TriangleData d = derive(tri);
  return triangle_from_sides(1.0, d.M, d.N, chart);
}

std::array<Point, 3> vertices(const Triangle& tri) { return {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{tri.a, tri.b}}; }

double ConvexPolygon::area() const {
  double s = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vertices[i];
    const Point& q = vertices[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return 0.5 * s;
}

double ConvexPolygon::perimeter() const {
  double s = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vertices[i];
    const Point& q = vertices[(i + 1) % n];
    s += std::hypot(q.x - p.x, q.y - p.y);
  }
  return s;
}

ConvexPolygon make_kite(double t, double w) {
  if (!(t > 0.0 && t < 1.0) || !(w > 0.0)) {
    throw Error(ErrorCode::DegenerateShape, "kite needs 0 < t < 1 and w > 0");
  }
  return ConvexPolygon{{Point{0.0, 0.0}, Point{t, -w}, Point{1.0, 0.0}, Point{t, w}}};
}

double tangential_inradius(const ConvexPolygon& poly) { return 2.0 * poly.area() / poly.perimeter(); }

bool is_tangential_quadrilateral(const ConvexPolygon& poly, double tol) {
  if (poly.vertices.size() != 4) return false;
  auto len = [&](int i) {
    const Point& p = poly.vertices[i];
    const Point& q = poly.vertices[(i + 1) % 4];
    return std::hypot(q.x - p.x, q.y - p.y);
  };
  // Pitot: opposite side sums agree.
  return std::abs(len(0) + len(2) - len(1) - len(3)) <= tol * poly.perimeter();
}

RegionId region_from_string(std::string_view name) {
  if (name == "T") return RegionId::T;
  if (name == "T_prime_acute" || name == "Tprime_acute") return RegionId::TPrimeAcute;
  if (name == "T_obtuse") return RegionId::TObtuse;
  if (name == "acute-case-1") return RegionId::AcuteCase1;
  if (name == "acute-case-2") return RegionId::AcuteCase2;
  if (name == "obtuse-case-1") return RegionId::ObtuseCase1;
  if (name == "obtuse-case-2") return RegionId::ObtuseCase2;
  if (name == "obtuse-case-3") return RegionId::ObtuseCase3;
  throw Error(ErrorCode::UnknownRegion, std::string(name));
}

std::string_view to_string(RegionId id) {
  switch (id) {
    case RegionId::T: return "T";
    case RegionId::TPrimeAcute: return "T_prime_acute";
    case RegionId::TObtuse: return "T_obtuse";
    case RegionId::AcuteCase1: return "acute-case-1";
    case RegionId::AcuteCase2: return "acute-case-2";
    case RegionId::ObtuseCase1: return "obtuse-case-1";
    case RegionId::ObtuseCase2: return "obtuse-case-2";
    case RegionId::ObtuseCase3: return "obtuse-case-3";
  }
  return "unknown";
}

double obtuse_case1_a_min() { return (3.0 - std::sqrt(24.0 * std::sqrt(15.0) - 87.0)) / 6.0; }

double obtuse_case1_lower(double a) { return 1.5 - 0.5 * std::sqrt(5.0) * std::sqrt(1.0 + 2.0 * a - 2.0 * a * a); }

double obtuse_case2_upper(double a) { return 2.0 * a * (1.0 - a) / (1.0 - a + a * a); }

bool in_region(double a, double b, RegionId region) {
  const double eps = kRegionSlack;
  auto le = [eps](double x, double y) { return x <= y + eps; };
  const bool half_strip = le(0.0, a) && le(a, 0.5);
  switch (region) {
    case RegionId::T:
      return half_strip && le(0.0, b) && le(b, std::sqrt(3.0) / 2.0) && le((a - 1.0) * (a - 1.0) + b * b, 1.0);
    case RegionId::TPrimeAcute:
      return half_strip && le(1.0, a * a + b * b);
    case RegionId::TObtuse:
      return half_strip && le(0.0, b) && le(b, 0.5) && le((a - 0.5) * (a - 0.5) + b * b, 0.25);
    case RegionId::AcuteCase1:
      return in_region(a, b, RegionId::TPrimeAcute) && le(std::sqrt(3.0) / 2.0, b) && le(b, 4.0);
    case RegionId::AcuteCase2:
      return in_region(a, b, RegionId::TPrimeAcute) && le(3.0, b);
    case RegionId::ObtuseCase1:
      return in_region(a, b, RegionId::TObtuse) && le(obtuse_case1_a_min(), a) && le(obtuse_case1_lower(a), b) &&
             le(b, std::sqrt(std::max(0.0, a - a * a)));
    case RegionId::ObtuseCase2:
      return in_region(a, b, RegionId::TObtuse) && le(b, obtuse_case2_upper(a));
    case RegionId::ObtuseCase3:
      return in_region(a, b, RegionId::TObtuse) && le(obtuse_case2_upper(a), b) &&
             le(b, std::sqrt(std::max(0.0, a - a * a))) && le(b, 0.3);
  }
  throw Error(ErrorCode::UnknownRegion, "unhandled region id");
}

}  // namespace polya::geometry
