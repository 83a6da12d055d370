#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polya::geometry {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kAngleTol = 1e-10;
/// Thinner triangles are left to the analytic bounds.
inline constexpr double kMinNumericHeight = 1e-6;
/// Slack applied to region inequalities so boundary points are members.
inline constexpr double kRegionSlack = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Triangle with vertices (0,0), (1,0), (a,b). Area is b/2.
struct Triangle {
  double a = 0.0;
  double b = 0.0;
};

/// Which normalisation a Triangle is expressed in: the longest side scaled to
/// 1 (obtuse-friendly chart) or the shortest side scaled to 1 (acute chart).
enum class Chart { LongestUnit, ShortestUnit };

struct TriangleData {
  double M = 0.0;  ///< |(a,b)|, side from the origin
  double N = 0.0;  ///< |(a-1,b)|, side from (1,0)
  double alpha = 0.0;  ///< angle at (0,0), between sides 1 and M
  double beta = 0.0;   ///< angle at (1,0), between sides 1 and N
  double gamma = 0.0;  ///< apex angle, between sides M and N
  double area = 0.0;
  double perimeter = 0.0;
  double diameter = 0.0;
  double height = 0.0;   ///< altitude onto the longest side
  double inradius = 0.0;
};

enum class TriangleClass {
  Equilateral,
  Acute,
  Right,
  Obtuse,
  IsoscelesAcute,
  IsoscelesObtuse,
  Degenerate,
};

std::string_view to_string(TriangleClass c);

/// Half-widths; the domain is (-a,a) x (-b,b).
struct Rectangle {
  double a = 0.0;
  double b = 0.0;
  double area() const { return 4.0 * a * b; }
  double perimeter() const { return 4.0 * (a + b); }
};

/// Circular sector of opening `angle` and radius `radius`, apex at the origin,
/// symmetric about the positive x-axis.
struct Sector {
  double angle = 0.0;
  double radius = 0.0;
  double area() const { return 0.5 * radius * radius * angle; }
};

/// Convex polygon, counter-clockwise. Used for tangential quadrilaterals.
struct ConvexPolygon {
  std::vector<Point> vertices;
  double area() const;
  double perimeter() const;
};

TriangleData derive(const Triangle& tri);
TriangleClass classify(const Triangle& tri);

/// Triangle with the given side lengths (any order), in the requested chart.
/// For the shortest-unit chart the result has 0 <= a only when the triangle is
/// acute or right; obtuse triangles give a < 0.
Triangle triangle_from_sides(double s1, double s2, double s3, Chart chart);

/// Re-express a triangle shape in the other chart.
Triangle to_chart(const Triangle& tri, Chart chart);

std::array<Point, 3> vertices(const Triangle& tri);

/// Kite with unit axis of symmetry split at `t` (0<t<1) and half-width `w`.
/// Every kite is tangential.
ConvexPolygon make_kite(double t, double w);
/// Inradius of a tangential polygon (2*area/perimeter).
double tangential_inradius(const ConvexPolygon& poly);
bool is_tangential_quadrilateral(const ConvexPolygon& poly, double tol = 1e-9);

enum class RegionId {
  T,                ///< admissible set, longest-unit chart
  TPrimeAcute,      ///< acute/right set, shortest-unit chart
  TObtuse,
  AcuteCase1,       ///< sqrt(3)/2 <= b <= 4 within TPrimeAcute
  AcuteCase2,       ///< b >= 3 within TPrimeAcute
  ObtuseCase1,
  ObtuseCase2,
  ObtuseCase3,
};

RegionId region_from_string(std::string_view name);
std::string_view to_string(RegionId id);
bool in_region(double a, double b, RegionId region);

/// Smallest a for obtuse case 1, (3 - sqrt(24 sqrt(15) - 87))/6.
double obtuse_case1_a_min();
/// Lower boundary of obtuse case 1: 3/2 - (sqrt5/2) sqrt(1 + 2a - 2a^2).
double obtuse_case1_lower(double a);
/// Curve 2a(1-a)/(1-a+a^2) separating obtuse cases 2 and 3.
double obtuse_case2_upper(double a);

}  // namespace polya::geometry
