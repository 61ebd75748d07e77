#pragma once

// Reference algorithms and exhaustive oracles. These exist to be trusted,
// not fast; the engine is tested against them.

#include <cstdint>
#include <vector>

#include "skycell/cell.hpp"
#include "skycell/dataset.hpp"
#include "skycell/grid.hpp"
#include "skycell/parallel.hpp"

namespace skycell {

inline constexpr uint32_t kDefaultOracleCap = 50000;

// Block-nested-loops: buffer of undominated points seen so far; a new
// point evicts buffer members it dominates.
std::vector<uint32_t> bnl_skyline(const PointSet& ps);

// All-pairs oracle. Refuses inputs above the cap rather than subsample.
std::vector<uint32_t> brute_force_skyline(const PointSet& ps, uint32_t cap = kDefaultOracleCap,
                                          ThreadPool* pool = nullptr);

// Exact key cells of one layer (auxiliary cells included): non-empty cells
// neither dominated nor partially dominated by any other cell.
//
// Processes cells by ascending column sum against the keys found so far;
// any dominator chain tops out at a key cell (the sdom relation is
// transitive and acyclic over distinct cells), so checking against keys
// alone is exhaustive. The literal all-pairs variant below cross-checks
// this on small layers.
KeyCellSet key_cells_oracle(const MultiLayerGrid& grid, int layer);
KeyCellSet key_cells_oracle_allpairs(const MultiLayerGrid& grid, int layer);

// Exact candidate cells of one layer, ascending: cells partially dominated
// by a key cell and dominated by none. In-grid cells only. With
// include_empty the whole layer is enumerated (feasible for small layers
// only); otherwise only non-empty cells are considered.
std::vector<CellIndex> candidate_cells_oracle(const MultiLayerGrid& grid, int layer,
                                              bool include_empty);

}  // namespace skycell
