#include "hrec/solvers.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <cmath>

#include "hrec/errors.hpp"

namespace hrec {

namespace stats {
std::atomic<std::uint64_t> sparse_factorizations{0};
std::atomic<std::uint64_t> sparse_solves{0};
} // namespace stats

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseMatrix& a) {
  Eigen::SparseMatrix<double> m(a.rows(), a.cols());
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(a.nnz()));
  for (int r = 0; r < a.rows(); ++r) {
    const auto cs = a.row_cols(r);
    const auto vs = a.row_vals(r);
    for (std::size_t k = 0; k < cs.size(); ++k) trips.emplace_back(r, cs[k], vs[k]);
  }
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

Eigen::VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> from_eigen(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

void check_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-6)) throw ConfigError("solver tol must be in (0, 1e-6]");
}

double relative_residual(const SparseMatrix& a, std::span<const double> x,
                         std::span<const double> b) {
  std::vector<double> ax = a.apply(x);
  double rr = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const double d = ax[i] - b[i];
    rr += d * d;
    bb += b[i] * b[i];
  }
  if (bb == 0.0) return std::sqrt(rr);
  return std::sqrt(rr / bb);
}

} // namespace

struct SpdFactorization::Impl {
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  int dim = 0;
};

SpdFactorization::SpdFactorization(const SparseMatrix& a) : impl_(std::make_unique<Impl>()) {
  impl_->dim = a.rows();
  impl_->ldlt.compute(to_eigen(a));
  stats::sparse_factorizations.fetch_add(1, std::memory_order_relaxed);
  if (impl_->ldlt.info() != Eigen::Success)
    throw SolverError("SPD factorization failed (matrix not positive definite?)", 1.0);
}

SpdFactorization::~SpdFactorization() = default;
SpdFactorization::SpdFactorization(SpdFactorization&&) noexcept = default;
SpdFactorization& SpdFactorization::operator=(SpdFactorization&&) noexcept = default;

std::vector<double> SpdFactorization::solve(std::span<const double> b) const {
  stats::sparse_solves.fetch_add(1, std::memory_order_relaxed);
  Eigen::VectorXd x = impl_->ldlt.solve(to_eigen(b));
  return from_eigen(x);
}

int SpdFactorization::dim() const { return impl_->dim; }

struct SparseLuFactorization::Impl {
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  int dim = 0;
};

SparseLuFactorization::SparseLuFactorization(const SparseMatrix& a)
    : impl_(std::make_unique<Impl>()) {
  impl_->dim = a.rows();
  Eigen::SparseMatrix<double> m = to_eigen(a);
  impl_->lu.analyzePattern(m);
  impl_->lu.factorize(m);
  stats::sparse_factorizations.fetch_add(1, std::memory_order_relaxed);
  if (impl_->lu.info() != Eigen::Success)
    throw SolverError("sparse LU factorization failed", 1.0);
}

SparseLuFactorization::~SparseLuFactorization() = default;
SparseLuFactorization::SparseLuFactorization(SparseLuFactorization&&) noexcept = default;
SparseLuFactorization& SparseLuFactorization::operator=(SparseLuFactorization&&) noexcept = default;

std::vector<double> SparseLuFactorization::solve(std::span<const double> b) const {
  stats::sparse_solves.fetch_add(1, std::memory_order_relaxed);
  Eigen::VectorXd x = impl_->lu.solve(to_eigen(b));
  return from_eigen(x);
}

int SparseLuFactorization::dim() const { return impl_->dim; }

std::vector<double> solve_spd(const SparseMatrix& a, std::span<const double> b, double tol) {
  check_tol(tol);
  SpdFactorization factor(a);
  std::vector<double> x = factor.solve(b);
  const double res = relative_residual(a, x, b);
  if (!(res <= tol))
    throw SolverError("solve_spd missed the residual contract", res);
  return x;
}

std::vector<double> solve_symmetric_indefinite(const SparseMatrix& a, std::span<const double> b,
                                               double tol) {
  check_tol(tol);
  SparseLuFactorization factor(a);
  std::vector<double> x = factor.solve(b);
  const double res = relative_residual(a, x, b);
  if (!(res <= tol))
    throw SolverError("solve_symmetric_indefinite missed the residual contract", res);
  return x;
}

namespace {

Eigen::MatrixXd to_eigen_dense(const DenseMatrix& g) {
  Eigen::MatrixXd m(g.rows(), g.cols());
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c) m(r, c) = g.at(r, c);
  return m;
}

// Partial-pivoting LU with a singularity check on the U diagonal.
Eigen::PartialPivLU<Eigen::MatrixXd> dense_lu_checked(const DenseMatrix& g) {
  if (g.rows() != g.cols()) throw ConfigError("solve_dense: matrix must be square");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(to_eigen_dense(g));
  const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
  const double dmax = diag.maxCoeff();
  const double dmin = diag.minCoeff();
  if (dmax == 0.0 || dmin <= dmax * 1e-15)
    throw RecoveryError("dense solve: Gramian singular to working precision");
  return lu;
}

} // namespace

DenseSolveResult solve_dense(const DenseMatrix& g, std::span<const double> w) {
  if (static_cast<int>(w.size()) != g.rows()) throw ConfigError("solve_dense: size mismatch");
  auto lu = dense_lu_checked(g);
  Eigen::VectorXd x = lu.solve(to_eigen(w));
  DenseSolveResult out;
  out.x = from_eigen(x);
  double resid = 0.0;
  for (int r = 0; r < g.rows(); ++r) {
    double s = 0.0;
    for (int c = 0; c < g.cols(); ++c) s += g.at(r, c) * out.x[static_cast<std::size_t>(c)];
    resid = std::max(resid, std::abs(s - w[static_cast<std::size_t>(r)]));
  }
  out.residual_inf = resid;
  return out;
}

double one_norm_inverse_estimate(const DenseMatrix& g) {
  auto lu = dense_lu_checked(g);
  const Eigen::MatrixXd inv = lu.inverse();
  double best = 0.0;
  for (int c = 0; c < inv.cols(); ++c) best = std::max(best, inv.col(c).cwiseAbs().sum());
  return best;
}

double dense_condition(const DenseMatrix& g) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen_dense(g));
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(s.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(s.size() - 1);
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen_dense(g));
  return from_eigen(es.eigenvalues());
}

} // namespace hrec
