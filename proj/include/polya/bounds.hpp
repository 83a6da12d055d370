#pragma once

#include <string>

#include "polya/interval.hpp"

namespace polya::bounds {

enum class BoundKind { LowerOnT, LowerOnLambda, LowerOnF, UpperOnF, UpperOnLambda };

std::string_view to_string(BoundKind kind);

/// `value` is meaningful only when `valid` is true; `validity` states the
/// condition under which the underlying inequality holds.
struct BoundValue {
  double value = 0.0;
  BoundKind kind = BoundKind::LowerOnT;
  std::string name;
  std::string validity;
  bool valid = true;
};

/// T >= b^3 / (80 (1 - a + a^2 + b^2)), any triangle (a,b).
BoundValue torsion_lb_equilateral_test(double a, double b);
Rational torsion_lb_equilateral_test(const Rational& a, const Rational& b);

/// T >= (1-a) a b^3 / (48 (a - a^2 + b^2)), 0 < a < 1.
BoundValue torsion_lb_obtuse_test(double a, double b);
Rational torsion_lb_obtuse_test(const Rational& a, const Rational& b);

/// lambda1 >= (theta / b) j_{pi/theta}^2 where theta is the smallest angle
/// and b is twice the area.
BoundValue eig_lb_sector(double theta, double b);
/// Same with j_nu replaced by nu + c1 2^(-1/3) nu^(1/3).
BoundValue eig_lb_sector_minorized(double theta, double b);

/// lambda1 >= pi^2 (1/d + 1/h)^2, d the diameter and h the height onto the longest side.
BoundValue eig_lb_diameter_height(double d, double h);

/// T >= (h^4/16)(tan g - g - 124 zeta(5) g^4 / pi^5). Requires M >= 2 or
/// g <= pi/4; throws ValidityViolation otherwise.
BoundValue torsion_lb_sector_closed(double h, double gamma, double M);

/// Altitude of the isosceles triangle with legs M and apex angle of the
/// triangle with sides M, N and the right angle opposite N.
double altitude_iso(double M, double N);

enum class DomainKind { Triangle, TangentialQuadrilateral };

struct Metrics {
  double lambda1 = 0.0;
  double T = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
};

struct UpperChain {
  BoundValue bound;            ///< product of the two caps
  double eigen_factor = 0.0;   ///< lambda1 area^2 / P^2
  double torsion_factor = 0.0; ///< T P^2 / area^3
  double eigen_cap = 0.0;
  double torsion_cap = 0.0;
  bool eigen_ok = false;
  bool torsion_ok = false;
};

UpperChain upper_chain(const Metrics& m, DomainKind kind);

/// F <= (pi^2/24)(1 + 2 sqrt(pi) sqrt(area)/P)^2 for tangential polygons.
BoundValue thinning_upper(double area, double perimeter);

struct AuxFunctionals {
  double Psi = 0.0;            ///< T / (area R^2)
  double Phi = 0.0;            ///< T / (area max u)
  double hersch_protter = 0.0; ///< lambda1 R^2
  double payne = 0.0;          ///< lambda1 max u
};

AuxFunctionals aux_functionals(double lambda1, double T, double torsion_max, double area, double inradius);

}  // namespace polya::bounds
