#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "polya/error.hpp"
#include "polya/fem.hpp"

namespace polya::fem {
namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

constexpr double kTorsionTol = 1e-12;
constexpr double kEigenTol = 1e-12;
constexpr int kEigenMaxIter = 500;
constexpr int kBlock = 6;
constexpr Eigen::Index kDenseLimit = 400;

struct System {
  std::vector<int> dof;  ///< vertex -> unknown, -1 on the boundary
  std::vector<int> vertex_of;
  SpMat K;
  SpMat M;
  Vec load;  ///< lumped unit source
};

System assemble(const Mesh& m, bool with_mass) {
  System s;
  s.dof.assign(m.vertices.size(), -1);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    if (!m.boundary[i]) {
      s.dof[i] = static_cast<int>(s.vertex_of.size());
      s.vertex_of.push_back(static_cast<int>(i));
    }
  }
  const Eigen::Index n = static_cast<Eigen::Index>(s.vertex_of.size());
  if (n == 0) throw Error(ErrorCode::DegenerateShape, "mesh has no interior vertex");

  std::vector<Eigen::Triplet<double>> kt, mt;
  kt.reserve(m.elements.size() * 9);
  if (with_mass) mt.reserve(m.elements.size() * 9);
  s.load = Vec::Zero(n);
  for (const auto& e : m.elements) {
    const Point& p0 = m.vertices[e[0]];
    const Point& p1 = m.vertices[e[1]];
    const Point& p2 = m.vertices[e[2]];
    double area = 0.5 * ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y));
    // Gradient of the hat at vertex k is (y_{k+1} - y_{k+2}, x_{k+2} - x_{k+1}) / (2 area).
    const double gx[3] = {p1.y - p2.y, p2.y - p0.y, p0.y - p1.y};
    const double gy[3] = {p2.x - p1.x, p0.x - p2.x, p1.x - p0.x};
    for (int i = 0; i < 3; ++i) {
      int di = s.dof[e[i]];
      if (di < 0) continue;
      s.load[di] += area / 3.0;
      for (int j = 0; j < 3; ++j) {
        int dj = s.dof[e[j]];
        if (dj < 0) continue;
        kt.emplace_back(di, dj, (gx[i] * gx[j] + gy[i] * gy[j]) / (4.0 * area));
        if (with_mass) mt.emplace_back(di, dj, area / 12.0 * (i == j ? 2.0 : 1.0));
      }
    }
  }
  s.K.resize(n, n);
  s.K.setFromTriplets(kt.begin(), kt.end());
  if (with_mass) {
    s.M.resize(n, n);
    s.M.setFromTriplets(mt.begin(), mt.end());
  }
  return s;
}

Vec restrict_to_dofs(const System& s, const std::vector<double>& nodal) {
  Vec v(static_cast<Eigen::Index>(s.vertex_of.size()));
  for (std::size_t k = 0; k < s.vertex_of.size(); ++k) v[static_cast<Eigen::Index>(k)] = nodal[s.vertex_of[k]];
  return v;
}

std::vector<double> expand_to_nodes(const System& s, const Vec& v, std::size_t nv) {
  std::vector<double> nodal(nv, 0.0);
  for (std::size_t k = 0; k < s.vertex_of.size(); ++k) nodal[s.vertex_of[k]] = v[static_cast<Eigen::Index>(k)];
  return nodal;
}

// Jacobi-preconditioned conjugate gradients, sequential and deterministic.
Vec pcg(const SpMat& K, const Vec& b, Vec x, int& iterations) {
  const Vec dinv = K.diagonal().cwiseInverse();
  Vec r = b - K * x;
  Vec z = dinv.cwiseProduct(r);
  Vec p = z;
  double rz = r.dot(z);
  const double bnorm = b.norm();
  const int max_iter = std::max<int>(1000, 20 * static_cast<int>(b.size()));
  iterations = 0;
  while (r.norm() > kTorsionTol * bnorm) {
    if (iterations >= max_iter || !std::isfinite(rz)) {
      throw Error(ErrorCode::SolverDivergence, "CG did not reach relative residual 1e-12");
    }
    Vec q = K * p;
    double alpha = rz / p.dot(q);
    x += alpha * p;
    r -= alpha * q;
    z = dinv.cwiseProduct(r);
    double rz_new = r.dot(z);
    p = z + (rz_new / rz) * p;
    rz = rz_new;
    ++iterations;
  }
  return x;
}

// Rayleigh-Ritz on span(Y); returns Ritz values ascending, Y replaced by the
// M-orthonormal Ritz vectors.
Vec rayleigh_ritz(const SpMat& K, const SpMat& M, Eigen::MatrixXd& Y) {
  Eigen::MatrixXd KY = K * Y;
  Eigen::MatrixXd MY = M * Y;
  Eigen::MatrixXd Ka = Y.transpose() * KY;
  Eigen::MatrixXd Ma = Y.transpose() * MY;
  Ka = 0.5 * (Ka + Ka.transpose()).eval();
  Ma = 0.5 * (Ma + Ma.transpose()).eval();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(Ka, Ma);
  if (ges.info() != Eigen::Success) throw Error(ErrorCode::SolverDivergence, "Rayleigh-Ritz step failed");
  Y = (Y * ges.eigenvectors()).eval();
  return ges.eigenvalues();
}

EigenResult dense_lambda1(const System& s) {
  Eigen::MatrixXd K(s.K), M(s.M);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(K, M);
  if (ges.info() != Eigen::Success) throw Error(ErrorCode::SolverDivergence, "dense generalized eigensolver failed");
  EigenResult r;
  r.lambda1 = ges.eigenvalues()[0];
  Eigen::Index k = std::min<Eigen::Index>(kBlock, K.rows());
  for (Eigen::Index j = 0; j < k; ++j) {
    const Vec col = ges.eigenvectors().col(j);
    r.block.emplace_back(col.data(), col.data() + col.size());
  }
  return r;
}

// Deterministic starting block: torsion function times low-order monomials.
Eigen::MatrixXd default_block(const Mesh& m, const System& s) {
  int it = 0;
  Vec u = pcg(s.K, s.load, Vec::Zero(s.load.size()), it);
  double cx = 0.0, cy = 0.0;
  for (int v : s.vertex_of) {
    cx += m.vertices[v].x;
    cy += m.vertices[v].y;
  }
  cx /= static_cast<double>(s.vertex_of.size());
  cy /= static_cast<double>(s.vertex_of.size());
  const Eigen::Index n = u.size();
  Eigen::MatrixXd X(n, kBlock);
  for (Eigen::Index k = 0; k < n; ++k) {
    double x = m.vertices[s.vertex_of[k]].x - cx, y = m.vertices[s.vertex_of[k]].y - cy;
    const double w[kBlock] = {1.0, x, y, x * x, x * y, y * y};
    for (int j = 0; j < kBlock; ++j) X(k, j) = u[k] * w[j];
  }
  return X;
}

}  // namespace

TorsionResult solve_torsion(const Mesh& m, const std::vector<double>* initial) {
  System s = assemble(m, false);
  Vec x0 = initial != nullptr ? restrict_to_dofs(s, *initial) : Vec::Zero(s.load.size());
  TorsionResult r;
  Vec u = pcg(s.K, s.load, x0, r.iterations);
  r.T = s.load.dot(u);
  r.torsion_max = u.maxCoeff();
  r.nodal = expand_to_nodes(s, u, m.vertices.size());
  return r;
}

EigenResult solve_lambda1(const Mesh& m, const std::vector<std::vector<double>>* warm) {
  System s = assemble(m, true);
  const Eigen::Index n = s.load.size();
  if (n <= kDenseLimit) {
    EigenResult d = dense_lambda1(s);
    for (auto& v : d.block) v = expand_to_nodes(s, Eigen::Map<const Vec>(v.data(), n), m.vertices.size());
    return d;
  }

  Eigen::MatrixXd X;
  if (warm != nullptr && !warm->empty()) {
    X.resize(n, static_cast<Eigen::Index>(warm->size()));
    for (std::size_t j = 0; j < warm->size(); ++j) X.col(static_cast<Eigen::Index>(j)) = restrict_to_dofs(s, (*warm)[j]);
  } else {
    X = default_block(m, s);
  }

  Eigen::SimplicialLDLT<SpMat> ldlt(s.K);
  if (ldlt.info() != Eigen::Success) throw Error(ErrorCode::SolverDivergence, "stiffness factorization failed");

  EigenResult r;
  Vec ritz = rayleigh_ritz(s.K, s.M, X);
  double lambda = ritz[0];
  for (r.iterations = 1;; ++r.iterations) {
    if (r.iterations > kEigenMaxIter) throw Error(ErrorCode::SolverDivergence, "inverse iteration exceeded 500 steps");
    Eigen::MatrixXd Y = ldlt.solve(s.M * X);
    ritz = rayleigh_ritz(s.K, s.M, Y);
    X = std::move(Y);
    double next = ritz[0];
    if (!std::isfinite(next)) throw Error(ErrorCode::SolverDivergence, "non-finite Ritz value");
    bool done = std::abs(next - lambda) < kEigenTol * std::abs(next);
    lambda = next;
    if (done) break;
  }
  r.lambda1 = lambda;
  for (Eigen::Index j = 0; j < X.cols(); ++j) r.block.push_back(expand_to_nodes(s, X.col(j), m.vertices.size()));
  return r;
}

std::vector<double> prolongate(const Mesh& fine, const std::vector<double>& coarse_nodal) {
  if (fine.parents.size() != fine.vertices.size())
    throw Error(ErrorCode::InvalidArgument, "fine mesh carries no parent information");
  std::vector<double> out(fine.vertices.size(), 0.0);
  for (std::size_t i = 0; i < fine.vertices.size(); ++i) {
    if (fine.boundary[i]) continue;
    const auto& p = fine.parents[i];
    out[i] = 0.5 * (coarse_nodal.at(p[0]) + coarse_nodal.at(p[1]));
  }
  return out;
}

Extrapolation richardson(const std::array<double, 3>& v) {
  const double d1 = v[0] - v[1];
  const double d2 = v[1] - v[2];
  Extrapolation e;
  if (d1 == 0.0 && d2 == 0.0) {
    e.estimate = v[2];
    e.error_gauge = 0.0;
    e.observed_order = std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  if (std::abs(d2) >= std::abs(d1)) {
    throw Error(ErrorCode::NonContracting, "refinement increments do not shrink");
  }
  e.estimate = v[2] - d2 / 3.0;
  e.error_gauge = std::abs(e.estimate - v[2]);
  e.observed_order = (d1 / d2 > 0) ? std::log2(d1 / d2) : std::numeric_limits<double>::quiet_NaN();
  return e;
}

SpectralResult spectral(const Shape& s, int max_level) {
  if (max_level > kMaxLevel) throw Error(ErrorCode::LevelTooHigh, "level " + std::to_string(max_level) + " exceeds 9");
  if (max_level < 2) throw Error(ErrorCode::InvalidArgument, "spectral needs max_level >= 2");
  // Each refinement of a single similar element halves every altitude, so
  // level >= 2 already puts four elements across the thinnest direction.
  const int coarse = std::max(max_level - 2, 2);
  const int top = coarse + 2;

  SpectralResult out;
  out.max_level = top;
  out.area = shape_area(s);

  Mesh mesh = base_mesh(s);
  std::vector<std::vector<double>> block;
  std::vector<double> u_prev;
  for (int level = 0; level <= top; ++level) {
    if (level > 0) {
      Mesh fine = refine(mesh, s);
      if (!block.empty()) {
        for (auto& v : block) v = prolongate(fine, v);
      }
      if (!u_prev.empty()) u_prev = prolongate(fine, u_prev);
      mesh = std::move(fine);
    }
    if (mesh.interior_count() == 0) continue;
    EigenResult eig = solve_lambda1(mesh, block.empty() ? nullptr : &block);
    block = std::move(eig.block);
    if (level < coarse) continue;
    TorsionResult tor = solve_torsion(mesh, u_prev.empty() ? nullptr : &u_prev);
    u_prev = tor.nodal;
    out.h_sequence.push_back(mesh.max_edge());
    out.lambda_levels.push_back(eig.lambda1);
    out.T_levels.push_back(tor.T);
    out.torsion_max = tor.torsion_max;
  }

  const Extrapolation el = richardson({out.lambda_levels[0], out.lambda_levels[1], out.lambda_levels[2]});
  const Extrapolation et = richardson({out.T_levels[0], out.T_levels[1], out.T_levels[2]});
  out.lambda1 = el.estimate;
  out.T = et.estimate;
  out.lambda_gauge = el.error_gauge;
  out.T_gauge = et.error_gauge;
  out.F = out.lambda1 * out.T / out.area;
  out.error_gauge = std::abs(out.F - out.lambda_levels[2] * out.T_levels[2] / out.area);
  return out;
}

unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("POLYA_VERIFY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

}  // namespace polya::fem
