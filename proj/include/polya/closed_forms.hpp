#pragma once

#include "polya/geometry.hpp"

namespace polya::closed_forms {

/// Truncated series value; |true - value| <= tail_bound.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms_used = 0;
};

struct EquilateralValues {
  double T = 0.0;
  double lambda1 = 0.0;
  double F = 0.0;
};

struct EquilateralFields {
  double u = 0.0;    ///< torsion function
  double phi = 0.0;  ///< first Dirichlet eigenfunction (unnormalised)
};

inline constexpr int kDefaultTerms = 64;

/// Unit equilateral triangle with vertices (0,0), (1,0), (1/2, sqrt3/2).
EquilateralValues equilateral_exact();
EquilateralFields equilateral_fields(double x, double y);

/// Torsional rigidity of the sector of opening `angle` (< pi/2) and radius r.
SeriesValue sector_torsion(const geometry::Sector& s, int n_terms = kDefaultTerms);

/// J_nu(x) from the ascending series.
double bessel_j(double nu, double x);
/// First positive zero of J_nu, nu >= 0, to ~1e-12 relative.
double bessel_first_zero(double nu);

double rect_lambda1(const geometry::Rectangle& r);
/// Double series truncated to indices n, m < n_terms.
SeriesValue rect_torsion(const geometry::Rectangle& r, int n_terms = kDefaultTerms);
SeriesValue rect_F(const geometry::Rectangle& r, int n_terms = kDefaultTerms);
/// u(0,0), the maximum of the torsion function.
SeriesValue rect_center_torsion(const geometry::Rectangle& r, int n_terms = kDefaultTerms);

// Independent single-sum forms used as oracles in tests.
SeriesValue rect_torsion_single_sum(const geometry::Rectangle& r, int n_terms = 20000);
SeriesValue rect_center_torsion_strip(const geometry::Rectangle& r, int n_terms = 200);

}  // namespace polya::closed_forms
