#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hrec/fem.hpp"
#include "hrec/functionals.hpp"

namespace hrec {

/// Discrete Riesz representer of one measurement functional with respect to
/// the H1(Gamma) trace inner product on discretely harmonic functions.
struct RepresenterSolution {
  FeFunction phi;              // the representer
  std::vector<double> pi;      // interior multiplier, interior-node order
  double harmonicity_residual = 0.0; // ||(S phi)_interior||_2 / max(1, ||phi||_2)
  double solver_residual = 0.0;      // relative residual of the saddle system
  double h1_norm = 0.0;              // ||phi||_{H1} over the square
};

struct RepresenterSet {
  std::shared_ptr<const GridMesh> mesh;
  std::vector<RepresenterSolution> items;

  int size() const { return static_cast<int>(items.size()); }
};

/// Symmetric indefinite block system over (phi at all N nodes, multiplier at
/// the M interior nodes): the boundary H1(Gamma) Gram embedded at boundary
/// positions, interior-row-restricted stiffness off-diagonal blocks, zero
/// lower-right block. Right-hand side is (load_vector(lambda), 0).
std::pair<SparseMatrix, std::vector<double>> assemble_saddle_system(
    const GridMesh& mesh, const MeasurementFunctional& lambda, int quad_points = 4);

/// Solves representer saddle systems on a fixed mesh. The interior stiffness
/// and boundary Gram are factored once; each functional costs two interior
/// solves plus one boundary solve (a direct block elimination of the saddle
/// system, exact up to the factorization solves). solve() is const.
class SaddleSolver {
public:
  explicit SaddleSolver(std::shared_ptr<const GridMesh> mesh, double tol = kDefaultSolveTol);
  SaddleSolver(std::shared_ptr<const DirichletSolver> dirichlet, double tol);

  RepresenterSolution solve(std::span<const double> load) const;

  const DirichletSolver& dirichlet() const { return *dirichlet_; }
  const std::shared_ptr<const DirichletSolver>& dirichlet_ptr() const { return dirichlet_; }
  const SparseMatrix& boundary_gram() const { return boundary_gram_; }

private:
  std::shared_ptr<const DirichletSolver> dirichlet_;
  double tol_;
  SparseMatrix boundary_gram_;
  SpdFactorization boundary_factor_;
};

RepresenterSolution compute_representer(std::shared_ptr<const GridMesh> mesh,
                                        const MeasurementFunctional& lambda,
                                        double tol = kDefaultSolveTol);

/// Computes all representers of a sensor grid; load vectors and solves run
/// in parallel across functionals with deterministic output order. The first
/// failing functional aborts with its index in the error message.
RepresenterSet compute_representer_set(std::shared_ptr<const GridMesh> mesh,
                                       const SensorGrid& sensors,
                                       double tol = kDefaultSolveTol);

RepresenterSet compute_representer_set(const SaddleSolver& solver, const SensorGrid& sensors,
                                       std::vector<std::vector<double>>* load_vectors_out = nullptr);

} // namespace hrec
