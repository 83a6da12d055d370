#include "polya/bounds.hpp"

#include <cmath>

#include "polya/closed_forms.hpp"
#include "polya/error.hpp"
#include "polya/geometry.hpp"

namespace polya::bounds {
namespace {

constexpr double kPi = geometry::kPi;
constexpr double kZeta5 = 1.0369277551433699263;
constexpr double kC1 = 2.338107;

void require_angle(double theta) {
  if (!(theta > 0.0) || !(theta < kPi)) throw Error(ErrorCode::AngleOutOfRange, "angle must lie in (0, pi)");
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::LowerOnT: return "LowerOnT";
    case BoundKind::LowerOnLambda: return "LowerOnLambda";
    case BoundKind::LowerOnF: return "LowerOnF";
    case BoundKind::UpperOnF: return "UpperOnF";
    case BoundKind::UpperOnLambda: return "UpperOnLambda";
  }
  return "Unknown";
}

BoundValue torsion_lb_equilateral_test(double a, double b) {
  BoundValue v;
  v.value = b * b * b / (80.0 * (1.0 - a + a * a + b * b));
  v.kind = BoundKind::LowerOnT;
  v.name = "equilateral-test torsion";
  v.validity = "any triangle (a,b), b > 0";
  v.valid = b > 0.0;
  return v;
}

Rational torsion_lb_equilateral_test(const Rational& a, const Rational& b) {
  Rational r = b * b * b / (80 * (1 - a + a * a + b * b));
  r.canonicalize();
  return r;
}

BoundValue torsion_lb_obtuse_test(double a, double b) {
  if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::DomainError, "obtuse test function needs 0 < a < 1");
  BoundValue v;
  v.value = (1.0 - a) * a * b * b * b / (48.0 * (a - a * a + b * b));
  v.kind = BoundKind::LowerOnT;
  v.name = "obtuse-test torsion";
  v.validity = "0 < a < 1, b > 0";
  v.valid = b > 0.0;
  return v;
}

Rational torsion_lb_obtuse_test(const Rational& a, const Rational& b) {
  if (!(a > 0 && a < 1)) throw Error(ErrorCode::DomainError, "obtuse test function needs 0 < a < 1");
  Rational r = (1 - a) * a * b * b * b / (48 * (a - a * a + b * b));
  r.canonicalize();
  return r;
}

BoundValue eig_lb_sector(double theta, double b) {
  require_angle(theta);
  const double j = closed_forms::bessel_first_zero(kPi / theta);
  BoundValue v;
  v.value = theta / b * j * j;
  v.kind = BoundKind::LowerOnLambda;
  v.name = "equal-area sector eigenvalue";
  v.validity = "theta is the smallest angle, b = 2 area";
  return v;
}

BoundValue eig_lb_sector_minorized(double theta, double b) {
  require_angle(theta);
  const double nu = kPi / theta;
  const double j = nu + kC1 * std::cbrt(nu) / std::cbrt(2.0);
  BoundValue v;
  v.value = theta / b * j * j;
  v.kind = BoundKind::LowerOnLambda;
  v.name = "equal-area sector eigenvalue, Airy-minorized zero";
  v.validity = "theta is the smallest angle, b = 2 area";
  return v;
}

BoundValue eig_lb_diameter_height(double d, double h) {
  BoundValue v;
  const double s = 1.0 / d + 1.0 / h;
  v.value = kPi * kPi * s * s;
  v.kind = BoundKind::LowerOnLambda;
  v.name = "diameter-height eigenvalue";
  v.validity = "triangle, d diameter, h height onto the longest side";
  v.valid = d > 0.0 && h > 0.0;
  return v;
}

BoundValue torsion_lb_sector_closed(double h, double gamma, double M) {
  if (!(M >= 2.0 || (gamma >= 0.0 && gamma <= kPi / 4.0))) {
    throw Error(ErrorCode::ValidityViolation, "needs M >= 2 or gamma <= pi/4");
  }
  BoundValue v;
  const double g4 = gamma * gamma * gamma * gamma;
  v.value = std::pow(h, 4) / 16.0 * (std::tan(gamma) - gamma - 124.0 * kZeta5 * g4 / std::pow(kPi, 5));
  v.kind = BoundKind::LowerOnT;
  v.name = "inscribed sector torsion";
  v.validity = "sector of opening gamma and radius h inside the domain; M >= 2 or gamma <= pi/4";
  return v;
}

double altitude_iso(double M, double N) { return M / std::sqrt(2.0) * std::sqrt(1.0 + M / N); }

UpperChain upper_chain(const Metrics& m, DomainKind kind) {
  UpperChain c;
  const double P2 = m.perimeter * m.perimeter;
  c.eigen_factor = m.lambda1 * m.area * m.area / P2;
  c.torsion_factor = m.T * P2 / (m.area * m.area * m.area);
  c.eigen_cap = kind == DomainKind::Triangle ? kPi * kPi / 9.0 : kPi * kPi / 8.0;
  c.torsion_cap = 2.0 / 3.0;
  c.eigen_ok = c.eigen_factor <= c.eigen_cap;
  c.torsion_ok = c.torsion_factor < c.torsion_cap;
  c.bound.value = c.eigen_cap * c.torsion_cap;
  c.bound.kind = BoundKind::UpperOnF;
  c.bound.name = kind == DomainKind::Triangle ? "eigen x torsion caps (triangle)" : "eigen x torsion caps (tangential quadrilateral)";
  c.bound.validity = "convex domain of the stated kind";
  return c;
}

BoundValue thinning_upper(double area, double perimeter) {
  BoundValue v;
  const double s = 1.0 + 2.0 * std::sqrt(kPi) * std::sqrt(area) / perimeter;
  v.value = kPi * kPi / 24.0 * s * s;
  v.kind = BoundKind::UpperOnF;
  v.name = "thinning upper bound";
  v.validity = "tangential polygon (P R / 2 = area)";
  v.valid = area > 0.0 && perimeter > 0.0;
  return v;
}

AuxFunctionals aux_functionals(double lambda1, double T, double torsion_max, double area, double inradius) {
  AuxFunctionals f;
  f.Psi = T / (area * inradius * inradius);
  f.Phi = T / (area * torsion_max);
  f.hersch_protter = lambda1 * inradius * inradius;
  f.payne = lambda1 * torsion_max;
  return f;
}

}  // namespace polya::bounds
