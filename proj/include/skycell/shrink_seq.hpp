#pragma once

// Sequential key-cell shrinking: derives the key cells of layer i+1 from
// the key cells of layer i by enumerating column prefixes [col(d-1), ...,
// col(1)] and scanning the dimension-0 range bounded by the Gs/Ge tables.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "skycell/cell.hpp"
#include "skycell/grid.hpp"

namespace skycell {

// One dimension-0 bound per (d-1)-component prefix, each component in
// [-2, 2^(i+1) - 1]. Dense storage for small tables, hashed otherwise;
// untouched prefixes read the default.
class BoundTable {
 public:
  BoundTable(int prefix_len, int32_t lo, int32_t hi, int32_t default_value);

  int32_t get(uint64_t offset) const;
  void set(uint64_t offset, int32_t value);

  int32_t radix() const { return radix_; }

 private:
  int32_t default_;
  int32_t radix_;
  bool dense_;
  std::vector<int32_t> flat_;
  std::unordered_map<uint64_t, int32_t> sparse_;
};

struct BoundTables {
  BoundTable gs;  // first dimension-0 column worth scanning
  BoundTable ge;  // last dimension-0 column worth scanning (inclusive)
};

// Test observer; both hooks may be empty.
struct ShrinkSeqTrace {
  // A key cell was appended; gs/ge are the scan bounds of its prefix row.
  std::function<void(const CellIndex& cell, int32_t gs, int32_t ge)> on_append;
  // A cell's occupancy was probed during a scan.
  std::function<void(const CellIndex& cell)> on_probe;
};

// Returns the key cells of layer i+1 (auxiliary cells included) in
// enumeration order, given the layer-i key cells in enumeration order.
KeyCellSet shrink_key_cells_seq(const MultiLayerGrid& grid, int i, const KeyCellSet& ks_i,
                                ShrinkSeqTrace* trace = nullptr);

// Non-empty candidate cells of ks.layer, ascending: cells partially
// dominated by a key cell and dominated by none. Empty members cannot be
// key cells, cannot hold skyline points and never dominate, so dropping
// them preserves the result while keeping the frontier small.
std::vector<CellIndex> expand_candidates(const MultiLayerGrid& grid, const KeyCellSet& ks,
                                         ThreadPool* pool = nullptr);

}  // namespace skycell
