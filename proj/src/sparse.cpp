#include "hrec/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "hrec/errors.hpp"
#include "hrec/parallel.hpp"

namespace hrec {

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<int> row_offsets,
                           std::vector<int> col_indices, std::vector<double> values)
    : rows_(rows), cols_(cols), row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)), values_(std::move(values)) {}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<int> offsets(static_cast<std::size_t>(rows) + 1, 0);
  std::vector<int> cols_idx;
  std::vector<double> vals;
  cols_idx.reserve(triplets.size());
  vals.reserve(triplets.size());
  std::size_t i = 0;
  for (int r = 0; r < rows; ++r) {
    while (i < triplets.size() && triplets[i].row == r) {
      const int c = triplets[i].col;
      double v = 0.0;
      while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
        v += triplets[i++].value;
      cols_idx.push_back(c);
      vals.push_back(v);
    }
    offsets[static_cast<std::size_t>(r) + 1] = static_cast<int>(cols_idx.size());
  }
  return {rows, cols, std::move(offsets), std::move(cols_idx), std::move(vals)};
}

double SparseMatrix::coeff(int r, int c) const {
  const auto cols_span = row_cols(r);
  const auto it = std::lower_bound(cols_span.begin(), cols_span.end(), c);
  if (it == cols_span.end() || *it != c) return 0.0;
  return row_vals(r)[static_cast<std::size_t>(it - cols_span.begin())];
}

void SparseMatrix::apply(std::span<const double> x, std::span<double> y) const {
  par::for_each(rows_, [&](std::int64_t r) {
    const int lo = row_offsets_[static_cast<std::size_t>(r)];
    const int hi = row_offsets_[static_cast<std::size_t>(r) + 1];
    double s = 0.0;
    for (int k = lo; k < hi; ++k) s += values_[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(col_indices_[static_cast<std::size_t>(k)])];
    y[static_cast<std::size_t>(r)] = s;
  });
}

std::vector<double> SparseMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(static_cast<std::size_t>(rows_));
  apply(x, y);
  return y;
}

SparseMatrix SparseMatrix::extract(std::span<const int> rows, std::span<const int> col_map,
                                   int new_cols) const {
  const int nr = static_cast<int>(rows.size());
  std::vector<int> offsets(static_cast<std::size_t>(nr) + 1, 0);
  for (int r = 0; r < nr; ++r) {
    int count = 0;
    for (int c : row_cols(rows[static_cast<std::size_t>(r)]))
      if (col_map[static_cast<std::size_t>(c)] >= 0) ++count;
    offsets[static_cast<std::size_t>(r) + 1] = offsets[static_cast<std::size_t>(r)] + count;
  }
  std::vector<int> cols_idx(static_cast<std::size_t>(offsets[static_cast<std::size_t>(nr)]));
  std::vector<double> vals(cols_idx.size());
  par::for_each(nr, [&](std::int64_t r) {
    const int src = rows[static_cast<std::size_t>(r)];
    const int lo = offsets[static_cast<std::size_t>(r)];
    int at = lo;
    const auto cs = row_cols(src);
    const auto vs = row_vals(src);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const int nc = col_map[static_cast<std::size_t>(cs[k])];
      if (nc >= 0) {
        cols_idx[static_cast<std::size_t>(at)] = nc;
        vals[static_cast<std::size_t>(at)] = vs[k];
        ++at;
      }
    }
    // the column map need not preserve order (boundary chain positions do not)
    std::vector<std::pair<int, double>> entries;
    entries.reserve(static_cast<std::size_t>(at - lo));
    for (int k = lo; k < at; ++k)
      entries.emplace_back(cols_idx[static_cast<std::size_t>(k)], vals[static_cast<std::size_t>(k)]);
    std::sort(entries.begin(), entries.end());
    for (int k = lo; k < at; ++k) {
      cols_idx[static_cast<std::size_t>(k)] = entries[static_cast<std::size_t>(k - lo)].first;
      vals[static_cast<std::size_t>(k)] = entries[static_cast<std::size_t>(k - lo)].second;
    }
  });
  return {nr, new_cols, std::move(offsets), std::move(cols_idx), std::move(vals)};
}

double SparseMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (int r = 0; r < rows_; ++r) {
    const auto cs = row_cols(r);
    const auto vs = row_vals(r);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const double d = std::abs(vs[k] - coeff(cs[k], r));
      if (d > worst) worst = d;
    }
  }
  return worst;
}

void SparseMatrix::validate() const {
  if (static_cast<int>(row_offsets_.size()) != rows_ + 1)
    throw ConfigError("SparseMatrix: bad row offsets");
  for (int r = 0; r < rows_; ++r) {
    const auto cs = row_cols(r);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k] < 0 || cs[k] >= cols_) throw ConfigError("SparseMatrix: column out of range");
      if (k > 0 && cs[k] <= cs[k - 1])
        throw ConfigError("SparseMatrix: columns not strictly increasing");
    }
    for (double v : row_vals(r))
      if (!std::isfinite(v)) throw ConfigError("SparseMatrix: non-finite value");
  }
}

double DenseMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const double d = std::abs(at(r, c) - at(c, r));
      if (d > worst) worst = d;
    }
  return worst;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double norm_inf(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

} // namespace hrec
