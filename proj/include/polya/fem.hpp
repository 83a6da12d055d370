#pragma once

#include <array>
#include <iosfwd>
#include <variant>
#include <vector>

#include "polya/geometry.hpp"

namespace polya::fem {

using geometry::Point;

struct Mesh {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> elements;  ///< counter-clockwise
  std::vector<bool> boundary;                ///< per vertex
  /// For each vertex, the two coarse vertices it was created between (a
  /// vertex inherited from the coarse mesh lists itself twice). Empty at level 0.
  std::vector<std::array<int, 2>> parents;
  int level = 0;

  std::size_t interior_count() const;
  double max_edge() const;
};

using Shape = std::variant<geometry::Triangle, geometry::Rectangle, geometry::Sector, geometry::ConvexPolygon>;

inline constexpr int kMaxLevel = 9;

double shape_area(const Shape& s);
double shape_perimeter(const Shape& s);

Mesh base_mesh(const Shape& s);
/// Red refinement: every element split into four.
Mesh refine(const Mesh& m, const Shape& s);
/// Throws DegenerateShape or LevelTooHigh.
Mesh mesh_domain(const Shape& s, int level);

/// Plain-text OFF listing (vertices with z = 0, then triangles).
void write_off(std::ostream& out, const Mesh& m);

struct TorsionResult {
  double T = 0.0;
  double torsion_max = 0.0;
  int iterations = 0;
  std::vector<double> nodal;  ///< per mesh vertex, zero on the boundary
};

struct EigenResult {
  double lambda1 = 0.0;
  int iterations = 0;
  /// Ritz vectors on interior unknowns, reused as a warm start.
  std::vector<std::vector<double>> block;
};

/// Jacobi-preconditioned CG on the interior stiffness system with the
/// lumped unit load; relative residual 1e-12.
TorsionResult solve_torsion(const Mesh& m, const std::vector<double>* initial = nullptr);

/// Smallest eigenvalue of (stiffness, consistent mass). `warm` holds
/// full-length nodal vectors (e.g. prolongated from a coarser mesh).
EigenResult solve_lambda1(const Mesh& m, const std::vector<std::vector<double>>* warm = nullptr);

/// Linear interpolation of nodal values from the parent mesh.
std::vector<double> prolongate(const Mesh& fine, const std::vector<double>& coarse_nodal);

struct Extrapolation {
  double estimate = 0.0;
  double error_gauge = 0.0;
  double observed_order = 0.0;  ///< NaN when undefined
};

/// Three consecutive levels, O(h^2) leading error. Throws NonContracting.
Extrapolation richardson(const std::array<double, 3>& v);

struct SpectralResult {
  double lambda1 = 0.0;
  double T = 0.0;
  double torsion_max = 0.0;  ///< finest level
  double F = 0.0;
  double area = 0.0;
  std::vector<double> h_sequence;
  std::vector<double> lambda_levels;
  std::vector<double> T_levels;
  double error_gauge = 0.0;  ///< |F extrapolated - F finest|
  double lambda_gauge = 0.0;
  double T_gauge = 0.0;
  int max_level = 0;
};

/// FEM at levels max_level-2 .. max_level, Richardson-extrapolated.
SpectralResult spectral(const Shape& s, int max_level);

/// Threads used by parallel drivers: POLYA_VERIFY_THREADS, else hardware.
unsigned thread_budget();

}  // namespace polya::fem
