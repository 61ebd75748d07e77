#pragma once

// Multi-layer grid over a normalized point set. Layer i is a regular grid
// of 2^(i*d) cells; layer rho stores the contiguous point range of each
// non-empty cell, layers below store occupancy bits only.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "skycell/cell.hpp"
#include "skycell/dataset.hpp"
#include "skycell/parallel.hpp"

namespace skycell {

struct CellRange {
  uint32_t begin = 0;
  uint32_t end = 0;  // empty cells have begin == end
};

// Cell of a normalized point at one layer: column floor(p[k] * 2^layer)
// per dimension.
CellIndex point_to_cell(std::span<const double> coords, int layer);

// Interleaved-bit (Z-order) key of a bottom-layer cell, used as the point
// sort key. Any cell-contiguous order would do.
uint64_t morton_key(const CellIndex& c);

class MultiLayerGrid {
 public:
  // Sorts the points by the Z-order key of their layer-rho cell, records
  // per-cell ranges at layer rho, and derives occupancy of the layers
  // below by child-OR reduction.
  MultiLayerGrid(PointSet points, int rho, ThreadPool* pool = nullptr);

  int rho() const { return rho_; }
  int dims() const { return points_.d; }
  uint32_t size() const { return points_.n; }
  const PointSet& points() const { return points_; }

  CellIndex cell_of(uint32_t position, int layer) const {
    return point_to_cell(points_.point(position), layer);
  }

  // Auxiliary cells are always occupied; in-grid cells consult the range
  // table (layer rho) or the occupancy bits (layers below). Anything else
  // outside the grid is empty.
  bool occupied(const CellIndex& c) const;

  CellRange range(const CellIndex& leaf_cell) const;

  // Non-empty in-grid cells of one layer, ascending enumeration order.
  std::vector<CellIndex> nonempty_cells(int layer) const;

  uint64_t nonempty_count(int layer) const;

  CellIndex origin_cell() const { return CellIndex(0, points_.d); }

  // rho = min(6, floor(log2(n) / d)), at least 1.
  static int default_rho(uint64_t n, int d);

 private:
  PointSet points_;
  int rho_;
  std::unordered_map<uint64_t, CellRange> leaf_ranges_;
  std::vector<std::vector<uint64_t>> occupancy_;  // layers 0 .. rho-1
};

}  // namespace skycell
