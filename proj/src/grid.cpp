#include "skycell/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace skycell {

CellIndex point_to_cell(std::span<const double> coords, int layer) {
  CellIndex c(layer, static_cast<int>(coords.size()));
  const double scale = std::ldexp(1.0, layer);
  for (int k = 0; k < static_cast<int>(coords.size()); ++k)
    c.set_col(k, static_cast<int32_t>(coords[k] * scale));
  return c;
}

uint64_t morton_key(const CellIndex& c) {
  uint64_t key = 0;
  int out = 0;
  for (int bit = 0; bit < c.layer(); ++bit) {
    for (int k = 0; k < c.dims(); ++k) {
      key |= static_cast<uint64_t>((c.col(k) >> bit) & 1) << out;
      ++out;
    }
  }
  return key;
}

int MultiLayerGrid::default_rho(uint64_t n, int d) {
  const int by_data = static_cast<int>(std::bit_width(n > 0 ? n : 1) - 1) / d;
  return std::max(1, std::min(6, by_data));
}

MultiLayerGrid::MultiLayerGrid(PointSet points, int rho, ThreadPool* pool)
    : points_(std::move(points)), rho_(rho) {
  const int d = points_.d;
  if (rho_ < 1) throw ConfigError("grid: rho must be at least 1");
  if (rho_ * d > 60)
    throw ConfigError("grid: rho*d = " + std::to_string(rho_ * d) + " exceeds the 60-bit cell index budget");
  if ((rho_ - 1) * d > 32)
    throw ConfigError("grid: occupancy bit-sets for rho = " + std::to_string(rho_) + ", d = " +
                      std::to_string(d) + " would exceed memory");

  // Sort points by the Z-order key of their bottom-layer cell; ids break
  // ties so the permutation is unique.
  const uint32_t n = points_.n;
  std::vector<std::pair<uint64_t, uint32_t>> order(n);
  for (uint32_t i = 0; i < n; ++i) order[i] = {morton_key(cell_of(i, rho_)), i};
  auto less = [](const std::pair<uint64_t, uint32_t>& a, const std::pair<uint64_t, uint32_t>& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  };
  if (pool != nullptr)
    parallel_sort(order, *pool, less);
  else
    std::sort(order.begin(), order.end(), less);

  std::vector<double> sorted_coords(points_.coords.size());
  std::vector<uint32_t> sorted_ids(n);
  for (uint32_t pos = 0; pos < n; ++pos) {
    const uint32_t src = order[pos].second;
    sorted_ids[pos] = points_.ids[src];
    for (int k = 0; k < d; ++k)
      sorted_coords[static_cast<size_t>(pos) * d + k] = points_.coords[static_cast<size_t>(src) * d + k];
  }
  points_.coords.swap(sorted_coords);
  points_.ids.swap(sorted_ids);

  // Layer-rho ranges: equal Z-order keys mean equal cells, so each cell is
  // one contiguous run.
  for (uint32_t pos = 0; pos < n;) {
    uint32_t end = pos + 1;
    while (end < n && order[end].first == order[pos].first) ++end;
    leaf_ranges_[cell_of(pos, rho_).linear_index()] = CellRange{pos, end};
    pos = end;
  }

  // Occupancy below: a layer-i cell is non-empty iff some child at layer
  // i+1 is.
  occupancy_.resize(rho_);
  for (int layer = rho_ - 1; layer >= 0; --layer) {
    const uint64_t cells = uint64_t{1} << (static_cast<uint64_t>(layer) * d);
    occupancy_[layer].assign((cells + 63) / 64, 0);
    auto mark = [&](const CellIndex& c) {
      const uint64_t idx = c.linear_index();
      occupancy_[layer][idx >> 6] |= uint64_t{1} << (idx & 63);
    };
    if (layer == rho_ - 1) {
      for (const auto& [leaf_idx, r] : leaf_ranges_)
        mark(CellIndex::from_linear_index(leaf_idx, rho_, d).parent());
    } else {
      const auto& child_bits = occupancy_[layer + 1];
      for (uint64_t w = 0; w < child_bits.size(); ++w) {
        uint64_t bits = child_bits[w];
        while (bits != 0) {
          const int b = std::countr_zero(bits);
          bits &= bits - 1;
          mark(CellIndex::from_linear_index(w * 64 + b, layer + 1, d).parent());
        }
      }
    }
  }
}

bool MultiLayerGrid::occupied(const CellIndex& c) const {
  if (c.is_auxiliary()) return true;
  if (!c.in_grid()) return false;
  for (int k = 0; k < c.dims(); ++k)
    if (c.col(k) > c.top_column()) return false;
  if (c.layer() == rho_) return leaf_ranges_.count(c.linear_index()) != 0;
  const uint64_t idx = c.linear_index();
  return (occupancy_[c.layer()][idx >> 6] >> (idx & 63)) & 1;
}

CellRange MultiLayerGrid::range(const CellIndex& leaf_cell) const {
  if (leaf_cell.layer() != rho_) throw UsageError("range: only layer-rho cells carry point ranges");
  auto it = leaf_ranges_.find(leaf_cell.linear_index());
  return it == leaf_ranges_.end() ? CellRange{} : it->second;
}

std::vector<CellIndex> MultiLayerGrid::nonempty_cells(int layer) const {
  std::vector<CellIndex> out;
  const int d = points_.d;
  if (layer == rho_) {
    out.reserve(leaf_ranges_.size());
    for (const auto& [idx, r] : leaf_ranges_) out.push_back(CellIndex::from_linear_index(idx, rho_, d));
  } else {
    const auto& bits = occupancy_[layer];
    for (uint64_t w = 0; w < bits.size(); ++w) {
      uint64_t word = bits[w];
      while (word != 0) {
        const int b = std::countr_zero(word);
        word &= word - 1;
        out.push_back(CellIndex::from_linear_index(w * 64 + b, layer, d));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });
  return out;
}

uint64_t MultiLayerGrid::nonempty_count(int layer) const {
  if (layer == rho_) return leaf_ranges_.size();
  uint64_t total = 0;
  for (uint64_t w : occupancy_[layer]) total += static_cast<uint64_t>(std::popcount(w));
  return total;
}

}  // namespace skycell
