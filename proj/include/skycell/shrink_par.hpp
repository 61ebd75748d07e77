#pragma once

// Data-parallel key-cell shrinking. The candidate cells of layer i are
// split into their 2^d children, and a tournament over a complete binary
// tree classifies every child as key, candidate, or pruned. Each level of
// the tree is processed as a parallel-for with a barrier before the next
// level; writes are per-node, so any worker count produces identical
// results.

#include <cstdint>
#include <functional>
#include <vector>

#include "skycell/cell.hpp"
#include "skycell/grid.hpp"
#include "skycell/parallel.hpp"

namespace skycell {

// All 2^d children of the candidate cells, ascending enumeration order;
// nonempty_out receives one occupancy flag per child.
std::vector<CellIndex> split_candidates(const std::vector<CellIndex>& cs_i,
                                        const MultiLayerGrid& grid,
                                        std::vector<uint8_t>* nonempty_out);

// Ascending cell order of rotation m: dimension m is least significant,
// dimension (m + d - 1) mod d most significant.
bool rotated_less(const CellIndex& a, const CellIndex& b, int rotation);

// Domination restricted to the two lowest dimensions of the rotation:
// a sdom b with equal columns everywhere outside {m, m+1}.
bool two_dominates(const CellIndex& a, bool nonempty_a, const CellIndex& b, int rotation);

// Pairwise selector of the tournament: a wins only by 2-dominating b.
inline const CellIndex& dom2(const CellIndex& a, bool nonempty_a, const CellIndex& b,
                             int rotation) {
  return two_dominates(a, nonempty_a, b, rotation) ? a : b;
}

// Tree state handed to test observers after the bottom-up pass
// (after_top_down = false) and after the top-down pass of each rotation.
// Node values are indices into `cells`; -1 marks a padding sentinel.
struct TournamentSnapshot {
  int rotation = 0;
  const std::vector<CellIndex>* cells = nullptr;
  const std::vector<uint8_t>* nonempty = nullptr;
  std::vector<int32_t> leaf_order;          // leaf slot -> cell index
  std::vector<std::vector<int32_t>> u;      // level -> node -> cell index
  std::vector<std::vector<int32_t>> l;
};
using TournamentObserver = std::function<void(const TournamentSnapshot&, bool after_top_down)>;

struct LayerShrinkResult {
  KeyCellSet keys;                    // auxiliary cells included
  std::vector<CellIndex> candidates;  // non-empty, in-grid, ascending
};

// Classifies layer i+1 from the non-empty candidate cells of layer i.
// Equivalent to the sequential shrink plus candidate expansion.
LayerShrinkResult shrink_key_cells_par(const MultiLayerGrid& grid, int i,
                                       const std::vector<CellIndex>& cs_i, ThreadPool& pool,
                                       const TournamentObserver& observer = {});

}  // namespace skycell
