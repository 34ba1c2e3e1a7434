#pragma once

#include <array>
#include <memory>
#include <vector>

namespace hrec {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Uniform Q1 mesh of the unit square with side length h = 2^-level.
///
/// Nodes live on the (2^level + 1)^2 lattice and are numbered row-major:
/// node (i,j) has id j*(2^level+1) + i and coordinates (i*h, j*h).
/// The boundary chain lists the 4*2^level boundary node ids as one closed
/// counterclockwise cycle starting at (0,0). Immutable after construction.
class GridMesh {
public:
  explicit GridMesh(int level);

  int level() const { return level_; }
  double h() const { return h_; }
  int nodes_per_side() const { return nps_; }
  int cells_per_side() const { return nps_ - 1; }
  int num_nodes() const { return nps_ * nps_; }
  int num_cells() const { return (nps_ - 1) * (nps_ - 1); }
  int num_boundary_nodes() const { return static_cast<int>(boundary_chain_.size()); }
  int num_interior_nodes() const { return static_cast<int>(interior_ids_.size()); }

  int node_id(int i, int j) const { return j * nps_ + i; }
  Point node_coord(int id) const {
    return {static_cast<double>(id % nps_) * h_, static_cast<double>(id / nps_) * h_};
  }
  bool is_boundary(int id) const { return chain_pos_[static_cast<std::size_t>(id)] >= 0; }

  const std::vector<int>& boundary_chain() const { return boundary_chain_; }
  const std::vector<int>& interior_ids() const { return interior_ids_; }

  /// Chain position of a boundary node id, -1 for interior nodes.
  int chain_pos(int id) const { return chain_pos_[static_cast<std::size_t>(id)]; }
  /// Index into interior_ids() of an interior node id, -1 for boundary nodes.
  int interior_index(int id) const { return interior_index_[static_cast<std::size_t>(id)]; }

  struct CellRef {
    int cx = 0;
    int cy = 0;
    double xi = 0.0;  // local coordinates in [0,1]^2
    double eta = 0.0;
  };

  /// Cell containing p plus local coordinates. A point on an interior grid
  /// line belongs to the cell having it as lower-left corner; points on the
  /// right/top boundary clamp to the last cell (local coordinate 1).
  CellRef locate_cell(Point p) const;

  /// Corner node ids of cell (cx,cy) in local order SW, SE, NE, NW.
  std::array<int, 4> cell_nodes(int cx, int cy) const {
    const int sw = cy * nps_ + cx;
    return {sw, sw + 1, sw + nps_ + 1, sw + nps_};
  }

private:
  int level_;
  int nps_;
  double h_;
  std::vector<int> boundary_chain_;
  std::vector<int> interior_ids_;
  std::vector<int> chain_pos_;
  std::vector<int> interior_index_;
};

/// Levels 1..12 are supported; anything else is a ConfigError.
std::shared_ptr<const GridMesh> build_mesh(int level);

} // namespace hrec
