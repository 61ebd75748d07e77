#include "skycell/baseline.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

namespace skycell {

std::vector<uint32_t> bnl_skyline(const PointSet& ps) {
  std::vector<uint32_t> buffer;  // positions
  for (uint32_t pos = 0; pos < ps.n; ++pos) {
    const auto p = ps.point(pos);
    bool dominated = false;
    for (uint32_t b : buffer) {
      if (point_dominates(ps.point(b), p)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::erase_if(buffer, [&](uint32_t b) { return point_dominates(p, ps.point(b)); });
    buffer.push_back(pos);
  }
  std::vector<uint32_t> ids;
  ids.reserve(buffer.size());
  for (uint32_t b : buffer) ids.push_back(ps.ids[b]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<uint32_t> brute_force_skyline(const PointSet& ps, uint32_t cap, ThreadPool* pool) {
  if (ps.n > cap)
    throw UsageError("brute_force_skyline: n = " + std::to_string(ps.n) + " exceeds the oracle cap of " +
                     std::to_string(cap));
  std::vector<uint8_t> dominated(ps.n, 0);
  auto scan = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto p = ps.point(static_cast<uint32_t>(i));
      for (uint32_t j = 0; j < ps.n; ++j) {
        if (j == i) continue;
        if (point_dominates(ps.point(j), p)) {
          dominated[i] = 1;
          break;
        }
      }
    }
  };
  if (pool != nullptr)
    pool->parallel_for(ps.n, 256, scan);
  else
    scan(0, ps.n);
  std::vector<uint32_t> ids;
  for (uint32_t i = 0; i < ps.n; ++i)
    if (!dominated[i]) ids.push_back(ps.ids[i]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

int64_t column_sum(const CellIndex& c) {
  int64_t s = 0;
  for (int k = 0; k < c.dims(); ++k) s += c.col(k);
  return s;
}

std::vector<CellIndex> layer_cells_with_aux(const MultiLayerGrid& grid, int layer) {
  std::vector<CellIndex> cells = grid.nonempty_cells(layer);
  for (int j = 0; j < grid.dims(); ++j) cells.push_back(CellIndex::auxiliary(layer, grid.dims(), j));
  return cells;
}

}  // namespace

KeyCellSet key_cells_oracle(const MultiLayerGrid& grid, int layer) {
  std::vector<CellIndex> cells = layer_cells_with_aux(grid, layer);
  // Distinct cells related by sdom have strictly smaller column sums on the
  // dominating side, so an ascending sweep sees every potential dominator
  // of a cell before the cell itself.
  std::sort(cells.begin(), cells.end(), [](const CellIndex& a, const CellIndex& b) {
    const int64_t sa = column_sum(a), sb = column_sum(b);
    return sa != sb ? sa < sb : lex_less(a, b);
  });
  KeyCellSet ks;
  ks.layer = layer;
  for (const CellIndex& c : cells) {
    bool beaten = false;
    for (const CellIndex& k : ks.cells) {
      if (sdom(k, true, c)) {
        beaten = true;
        break;
      }
    }
    if (!beaten) ks.cells.push_back(c);
  }
  std::sort(ks.cells.begin(), ks.cells.end(),
            [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });
  return ks;
}

KeyCellSet key_cells_oracle_allpairs(const MultiLayerGrid& grid, int layer) {
  const std::vector<CellIndex> cells = layer_cells_with_aux(grid, layer);
  KeyCellSet ks;
  ks.layer = layer;
  for (const CellIndex& c : cells) {
    bool beaten = false;
    for (const CellIndex& other : cells) {
      if (other == c) continue;
      if (sdom(other, true, c)) {
        beaten = true;
        break;
      }
    }
    if (!beaten) ks.cells.push_back(c);
  }
  std::sort(ks.cells.begin(), ks.cells.end(),
            [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });
  return ks;
}

std::vector<CellIndex> candidate_cells_oracle(const MultiLayerGrid& grid, int layer,
                                              bool include_empty) {
  const KeyCellSet ks = key_cells_oracle(grid, layer);
  std::vector<CellIndex> cells;
  if (include_empty) {
    const int d = grid.dims();
    if (static_cast<uint64_t>(layer) * d > 24)
      throw UsageError("candidate_cells_oracle: layer too large to enumerate with empty cells");
    const uint64_t total = uint64_t{1} << (static_cast<uint64_t>(layer) * d);
    cells.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx)
      cells.push_back(CellIndex::from_linear_index(idx, layer, d));
  } else {
    cells = grid.nonempty_cells(layer);
  }
  std::vector<CellIndex> out;
  for (const CellIndex& c : cells) {
    bool pdomed = false, domed = false;
    for (const CellIndex& k : ks.cells) {
      switch (cell_relation(k, true, c)) {
        case DomRelation::kPartiallyDominates:
          pdomed = true;
          break;
        case DomRelation::kDominates:
          domed = true;
          break;
        case DomRelation::kNone:
          break;
      }
      if (domed) break;
    }
    if (pdomed && !domed) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });
  return out;
}

}  // namespace skycell
