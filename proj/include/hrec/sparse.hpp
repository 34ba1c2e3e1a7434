#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hrec {

struct Triplet {
  int row;
  int col;
  double value;
};

/// Compressed-row sparse matrix. Column indices are strictly increasing
/// within each row, no duplicates, all values finite.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols, std::vector<int> row_offsets,
               std::vector<int> col_indices, std::vector<double> values);

  /// Builds from an unordered triplet list; duplicates are summed.
  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(values_.size()); }

  const std::vector<int>& row_offsets() const { return row_offsets_; }
  const std::vector<int>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }

  std::span<const int> row_cols(int r) const {
    return {col_indices_.data() + row_offsets_[r],
            static_cast<std::size_t>(row_offsets_[r + 1] - row_offsets_[r])};
  }
  std::span<const double> row_vals(int r) const {
    return {values_.data() + row_offsets_[r],
            static_cast<std::size_t>(row_offsets_[r + 1] - row_offsets_[r])};
  }

  double coeff(int r, int c) const;

  /// y = A x (OpenMP over rows).
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;

  /// Submatrix with the given rows and a column keep-map (old col -> new col
  /// or -1 to drop). new_cols is the column count of the result.
  SparseMatrix extract(std::span<const int> rows, std::span<const int> col_map,
                       int new_cols) const;

  double max_asymmetry() const; // max |a_ij - a_ji|, square matrices

  /// Checks the structural invariants; throws ConfigError on violation.
  void validate() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_offsets_{0};
  std::vector<int> col_indices_;
  std::vector<double> values_;
};

/// Row-major dense matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int r, int c) { return v_[static_cast<std::size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return v_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

  double max_asymmetry() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> v_;
};

// Basic vector helpers shared across modules.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double norm_inf(std::span<const double> a);

} // namespace hrec
