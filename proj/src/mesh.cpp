#include "hrec/mesh.hpp"

#include <cmath>

#include "hrec/errors.hpp"

namespace hrec {

GridMesh::GridMesh(int level) : level_(level) {
  if (level < 1 || level > 12) throw ConfigError("GridMesh: refinement level must be in 1..12");
  const int k = 1 << level;
  nps_ = k + 1;
  h_ = 1.0 / static_cast<double>(k);

  boundary_chain_.reserve(4 * k);
  for (int i = 0; i <= k; ++i) boundary_chain_.push_back(node_id(i, 0));     // bottom
  for (int j = 1; j <= k; ++j) boundary_chain_.push_back(node_id(k, j));     // right
  for (int i = k - 1; i >= 0; --i) boundary_chain_.push_back(node_id(i, k)); // top
  for (int j = k - 1; j >= 1; --j) boundary_chain_.push_back(node_id(0, j)); // left

  chain_pos_.assign(static_cast<std::size_t>(num_nodes()), -1);
  for (int p = 0; p < static_cast<int>(boundary_chain_.size()); ++p)
    chain_pos_[static_cast<std::size_t>(boundary_chain_[p])] = p;

  interior_ids_.reserve(static_cast<std::size_t>(k - 1) * (k - 1));
  interior_index_.assign(static_cast<std::size_t>(num_nodes()), -1);
  for (int j = 1; j < k; ++j)
    for (int i = 1; i < k; ++i) {
      interior_index_[static_cast<std::size_t>(node_id(i, j))] =
          static_cast<int>(interior_ids_.size());
      interior_ids_.push_back(node_id(i, j));
    }
}

GridMesh::CellRef GridMesh::locate_cell(Point p) const {
  if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0)
    throw DomainError("locate_cell: point outside the closed unit square");
  const int k = cells_per_side();
  int cx = static_cast<int>(std::floor(p.x / h_));
  int cy = static_cast<int>(std::floor(p.y / h_));
  if (cx > k - 1) cx = k - 1;
  if (cy > k - 1) cy = k - 1;
  return {cx, cy, p.x / h_ - cx, p.y / h_ - cy};
}

std::shared_ptr<const GridMesh> build_mesh(int level) {
  return std::make_shared<const GridMesh>(level);
}

} // namespace hrec
