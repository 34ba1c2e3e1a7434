#pragma once

#include <atomic>
#include <memory>
#include <span>
#include <vector>

#include "hrec/sparse.hpp"

namespace hrec {

inline constexpr double kDefaultSolveTol = 1e-10;

/// Reusable factorization of a symmetric positive definite sparse matrix
/// (sparse LDL^T). solve() is const and safe to call concurrently.
class SpdFactorization {
public:
  explicit SpdFactorization(const SparseMatrix& a);
  ~SpdFactorization();
  SpdFactorization(SpdFactorization&&) noexcept;
  SpdFactorization& operator=(SpdFactorization&&) noexcept;

  std::vector<double> solve(std::span<const double> b) const;
  int dim() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Reusable factorization of a general square sparse matrix (sparse LU);
/// used for symmetric indefinite systems.
class SparseLuFactorization {
public:
  explicit SparseLuFactorization(const SparseMatrix& a);
  ~SparseLuFactorization();
  SparseLuFactorization(SparseLuFactorization&&) noexcept;
  SparseLuFactorization& operator=(SparseLuFactorization&&) noexcept;

  std::vector<double> solve(std::span<const double> b) const;
  int dim() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Solves A x = b for symmetric positive definite A so that
/// ||Ax - b||_2 <= tol * ||b||_2; throws SolverError with the achieved
/// residual otherwise. tol must lie in (0, 1e-6].
std::vector<double> solve_spd(const SparseMatrix& a, std::span<const double> b,
                              double tol = kDefaultSolveTol);

/// Same residual contract for symmetric (possibly indefinite) A.
std::vector<double> solve_symmetric_indefinite(const SparseMatrix& a,
                                               std::span<const double> b,
                                               double tol = kDefaultSolveTol);

struct DenseSolveResult {
  std::vector<double> x;
  double residual_inf = 0.0; // ||Gx - w||_inf
};

/// Direct dense solve with partial pivoting. Throws RecoveryError when a
/// pivot is singular to working precision.
DenseSolveResult solve_dense(const DenseMatrix& g, std::span<const double> w);

/// Exact ||G^-1||_1 via the explicit inverse (intended for m <= 200).
double one_norm_inverse_estimate(const DenseMatrix& g);

/// 2-norm condition number via singular values.
double dense_condition(const DenseMatrix& g);

/// All eigenvalues of a symmetric dense matrix, ascending.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& g);

namespace stats {
// Instrumentation used by tests to assert the offline/online split: online
// recovery must not trigger any sparse factorization or sparse solve.
extern std::atomic<std::uint64_t> sparse_factorizations;
extern std::atomic<std::uint64_t> sparse_solves;
} // namespace stats

} // namespace hrec
