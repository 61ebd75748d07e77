#pragma once

// Shared helpers for the test suites.

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "skycell/cell.hpp"
#include "skycell/datagen.hpp"
#include "skycell/dataset.hpp"
#include "skycell/grid.hpp"

namespace skycell::testing {

inline Dataset make_dataset(std::initializer_list<std::initializer_list<double>> rows) {
  Dataset ds;
  ds.d = static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    ds.coords.insert(ds.coords.end(), row.begin(), row.end());
    ++ds.n;
  }
  ds.compute_minmax();
  return ds;
}

inline Dataset random_dataset(Distribution dist, uint64_t n, int d, uint64_t seed) {
  GenSpec spec;
  spec.distribution = dist;
  spec.n = n;
  spec.d = d;
  spec.seed = seed;
  return generate(spec);
}

inline CellIndex cell(int layer, std::initializer_list<int32_t> slots) {
  CellIndex c(layer, static_cast<int>(slots.size()));
  int s = 0;
  for (int32_t v : slots) c.set_slot(s++, v);
  return c;
}

inline std::vector<CellIndex> sorted_cells(std::vector<CellIndex> cells) {
  std::sort(cells.begin(), cells.end(),
            [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });
  return cells;
}

inline bool same_cells(const std::vector<CellIndex>& a, const std::vector<CellIndex>& b) {
  return sorted_cells(a) == sorted_cells(b);
}

}  // namespace skycell::testing
