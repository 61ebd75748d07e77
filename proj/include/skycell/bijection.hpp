#pragma once

// One-to-one mapping between candidate cells and auxiliary candidate
// cells. These functions are verification machinery for the counting
// results; nothing on the query path calls them.

#include <vector>

#include "skycell/cell.hpp"

namespace skycell {

// Highest dimension where c and ck share a column; -1 if none.
int highest_equal_dim(const CellIndex& c, const CellIndex& ck);

// Maps a candidate cell to its auxiliary candidate cell: the minimum
// highest-equal dimension over all partially dominating key cells gets the
// top column, every other column is kept. Auxiliary key cells map to
// themselves. Throws UsageError when no key cell partially dominates c.
CellIndex psi_map(const CellIndex& c, const std::vector<CellIndex>& key_cells);

// Inverse direction: the smallest top-column dimension of ca receives the
// minimum qualifying key-cell column. Auxiliary key cells map to
// themselves.
CellIndex theta_map(const CellIndex& ca, const std::vector<CellIndex>& key_cells);

}  // namespace skycell
