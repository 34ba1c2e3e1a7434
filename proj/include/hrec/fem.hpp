#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hrec/mesh.hpp"
#include "hrec/solvers.hpp"
#include "hrec/sparse.hpp"

namespace hrec {

/// Closed-form scalar field with gradient, used for manufactured solutions,
/// load data and error measurement.
struct ExactField {
  std::function<double(double, double)> value;
  std::function<std::array<double, 2>(double, double)> gradient;
};

ExactField zero_field();
ExactField constant_field(double c);

/// Continuous piecewise-bilinear function: one coefficient per mesh node.
class FeFunction {
public:
  FeFunction() = default;
  explicit FeFunction(std::shared_ptr<const GridMesh> mesh);
  FeFunction(std::shared_ptr<const GridMesh> mesh, std::vector<double> coeffs);

  const GridMesh& mesh() const { return *mesh_; }
  const std::shared_ptr<const GridMesh>& mesh_ptr() const { return mesh_; }
  std::vector<double>& coeffs() { return coeffs_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

private:
  std::shared_ptr<const GridMesh> mesh_;
  std::vector<double> coeffs_;
};

/// Boundary nodal values ordered by boundary-chain position.
class BoundaryFunction {
public:
  BoundaryFunction() = default;
  explicit BoundaryFunction(std::shared_ptr<const GridMesh> mesh);
  BoundaryFunction(std::shared_ptr<const GridMesh> mesh, std::vector<double> values);

  const GridMesh& mesh() const { return *mesh_; }
  const std::shared_ptr<const GridMesh>& mesh_ptr() const { return mesh_; }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

private:
  std::shared_ptr<const GridMesh> mesh_;
  std::vector<double> values_;
};

/// Full stiffness matrix over all nodes: (i,j) -> integral of grad N_i . grad N_j.
/// Assembled from the exact Q1 element matrix; row-parallel and deterministic.
SparseMatrix assemble_stiffness(const GridMesh& mesh);

/// H1(Gamma) Gram matrix over boundary-chain positions: 1D mass + 1D
/// stiffness along the closed boundary polyline with periodic connectivity.
/// Corners are ordinary chain nodes.
SparseMatrix assemble_boundary_h1(const GridMesh& mesh);

/// Q1 element stiffness matrix on a square cell, local order SW,SE,NE,NW
/// (independent of the cell size in 2D).
std::array<std::array<double, 4>, 4> q1_element_stiffness();

/// Load vector over all nodes for a closed-form right-hand side:
/// entry i = integral of f * N_i, per-cell tensor Gauss quadrature.
std::vector<double> assemble_load(const GridMesh& mesh, const ExactField& f, int quad_points = 3);

/// Dirichlet solver on a fixed mesh; factors the interior stiffness once and
/// serves any number of right-hand sides. solve() is const and thread-safe.
class DirichletSolver {
public:
  explicit DirichletSolver(std::shared_ptr<const GridMesh> mesh, double tol = kDefaultSolveTol);

  /// Boundary values are taken over exactly; interior values solve the
  /// Galerkin system restricted to interior nodes.
  FeFunction solve(const ExactField* f, const BoundaryFunction& g) const;

  /// Interior solve with a prescribed interior load (no boundary data terms).
  std::vector<double> solve_interior(std::span<const double> load_interior) const;

  const SparseMatrix& stiffness() const { return stiffness_; }
  const std::shared_ptr<const GridMesh>& mesh_ptr() const { return mesh_; }
  double tol() const { return tol_; }

private:
  std::shared_ptr<const GridMesh> mesh_;
  double tol_;
  SparseMatrix stiffness_;
  SparseMatrix interior_block_;   // interior rows x interior cols
  SparseMatrix interior_to_chain_; // interior rows x chain cols
  SpdFactorization interior_factor_;

  friend class SaddleSolver;
};

/// -Lap u = f in the square, u = g on the boundary (nullptr f means f = 0).
FeFunction solve_dirichlet_poisson(std::shared_ptr<const GridMesh> mesh, const ExactField* f,
                                   const BoundaryFunction& g, double tol = kDefaultSolveTol);

/// Discrete harmonic extension: minimal Dirichlet energy with trace g.
FeFunction harmonic_extension(std::shared_ptr<const GridMesh> mesh, const BoundaryFunction& g,
                              double tol = kDefaultSolveTol);

/// Bilinear interpolation at p (throws DomainError outside the closed square).
double evaluate(const FeFunction& v, Point p);

/// Nodal interpolant of a closed-form field.
FeFunction interpolate(std::shared_ptr<const GridMesh> mesh, const ExactField& ref);

/// Trace of v as a boundary function (chain order).
BoundaryFunction trace(const FeFunction& v);

/// Boundary function with values ref(x) at the chain nodes.
BoundaryFunction boundary_values(std::shared_ptr<const GridMesh> mesh, const ExactField& ref);

/// || v - ref ||_{H1}: sqrt of the L2 norm squared of the value difference
/// plus the L2 norm squared of the gradient difference, per-cell tensor
/// Gauss quadrature with quad_points^2 points per cell.
double h1_error(const FeFunction& v, const ExactField& ref, int quad_points = 3);
double l2_error(const FeFunction& v, const ExactField& ref, int quad_points = 3);
double linf_error_on_nodes(const FeFunction& v, const ExactField& ref);

/// H1 norm of a finite element function (2x2 Gauss per cell, exact for Q1).
double fe_h1_norm(const FeFunction& v);

/// H1 norm of (coarse - fine) for functions on nested meshes
/// (coarse level <= fine level); 2x2 Gauss per fine cell is exact.
double fe_difference_h1(const FeFunction& coarse, const FeFunction& fine);

/// max |coarse - fine| over the fine mesh nodes.
double fe_difference_linf_nodes(const FeFunction& coarse, const FeFunction& fine);

/// Q1 shape values at local coordinates, order SW,SE,NE,NW.
inline std::array<double, 4> q1_values(double xi, double eta) {
  return {(1 - xi) * (1 - eta), xi * (1 - eta), xi * eta, (1 - xi) * eta};
}

} // namespace hrec
