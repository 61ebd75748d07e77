#pragma once

// Grid cell addressing and cell-level domination predicates.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skycell/error.hpp"

namespace skycell {

inline constexpr int kMaxDims = 16;

// A cell of one grid layer, addressed by signed column numbers.
//
// Columns are stored most-significant dimension first: slot 0 holds the
// column of dimension d-1, slot d-1 the column of dimension 0. Comparing
// the raw slot sequences lexicographically therefore orders cells in
// enumeration order, [col(d-1), ..., col(0)] ascending.
//
// Regular cells have all columns in [0, 2^layer). The d auxiliary key
// cells of a layer have column 2^layer - 1 in exactly one dimension and
// -1 everywhere else; they sit outside the grid and are non-empty by
// construction (each hosts one synthetic boundary point).
class CellIndex {
 public:
  CellIndex() = default;
  CellIndex(int layer, int dims) : dims_(static_cast<uint8_t>(dims)), layer_(static_cast<int8_t>(layer)) {
    slots_.fill(0);
  }

  static CellIndex auxiliary(int layer, int dims, int dim) {
    CellIndex c(layer, dims);
    for (int k = 0; k < dims; ++k) c.set_col(k, -1);
    c.set_col(dim, (int32_t{1} << layer) - 1);
    return c;
  }

  int layer() const { return layer_; }
  int dims() const { return dims_; }

  int32_t col(int dim) const { return slots_[dims_ - 1 - dim]; }
  void set_col(int dim, int32_t v) { slots_[dims_ - 1 - dim] = v; }

  // Raw storage order: slot s holds the column of dimension d-1-s.
  int32_t slot(int s) const { return slots_[s]; }
  void set_slot(int s, int32_t v) { slots_[s] = v; }

  int32_t top_column() const { return (int32_t{1} << layer_) - 1; }

  bool in_grid() const {
    for (int s = 0; s < dims_; ++s)
      if (slots_[s] < 0) return false;
    return true;
  }

  bool is_auxiliary() const {
    int tops = 0;
    for (int s = 0; s < dims_; ++s) {
      if (slots_[s] == -1) continue;
      if (slots_[s] == top_column()) {
        ++tops;
        continue;
      }
      return false;
    }
    return tops == 1;
  }

  // Dimension holding the top column; only meaningful for auxiliary cells.
  int auxiliary_dim() const {
    for (int k = 0; k < dims_; ++k)
      if (col(k) == top_column()) return k;
    return -1;
  }

  bool has_top_column() const {
    for (int s = 0; s < dims_; ++s)
      if (slots_[s] == top_column()) return true;
    return false;
  }

  CellIndex parent() const {
    CellIndex p(layer_ - 1, dims_);
    for (int s = 0; s < dims_; ++s) p.slots_[s] = slots_[s] >> 1;
    return p;
  }

  // Child in the next layer; bit k of `offsets` selects the upper half of
  // dimension k. Ascending `offsets` yields children in enumeration order.
  CellIndex child(uint32_t offsets) const {
    CellIndex c(layer_ + 1, dims_);
    for (int k = 0; k < dims_; ++k)
      c.set_col(k, 2 * col(k) + static_cast<int32_t>((offsets >> k) & 1u));
    return c;
  }

  // Row-major index over the layer's 2^(layer*d) cells. Requires in_grid().
  uint64_t linear_index() const {
    uint64_t idx = 0;
    for (int s = 0; s < dims_; ++s)
      idx = (idx << layer_) | static_cast<uint64_t>(slots_[s]);
    return idx;
  }

  static CellIndex from_linear_index(uint64_t idx, int layer, int dims) {
    CellIndex c(layer, dims);
    const uint64_t mask = (layer == 0) ? 0 : ((uint64_t{1} << layer) - 1);
    for (int s = dims - 1; s >= 0; --s) {
      c.slots_[s] = static_cast<int32_t>(idx & mask);
      idx >>= layer;
    }
    return c;
  }

  friend bool operator==(const CellIndex& a, const CellIndex& b) {
    if (a.layer_ != b.layer_ || a.dims_ != b.dims_) return false;
    for (int s = 0; s < a.dims_; ++s)
      if (a.slots_[s] != b.slots_[s]) return false;
    return true;
  }
  friend bool operator!=(const CellIndex& a, const CellIndex& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::array<int32_t, kMaxDims> slots_{};
  uint8_t dims_ = 0;
  int8_t layer_ = 0;
};

// Enumeration order: ascending by [col(d-1), ..., col(0)].
inline bool lex_less(const CellIndex& a, const CellIndex& b) {
  for (int s = 0; s < a.dims(); ++s) {
    if (a.slot(s) != b.slot(s)) return a.slot(s) < b.slot(s);
  }
  return false;
}

struct CellIndexHash {
  std::size_t operator()(const CellIndex& c) const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(c.layer()) << 8 | c.dims());
    for (int s = 0; s < c.dims(); ++s) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(c.slot(s))) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

enum class DomRelation { kDominates, kPartiallyDominates, kNone };

// Relation between two same-layer cells. An empty cell relates to nothing;
// the callers decide emptiness (auxiliary cells are always non-empty).
DomRelation cell_relation(const CellIndex& a, bool nonempty_a, const CellIndex& b);

inline bool sdom(const CellIndex& a, bool nonempty_a, const CellIndex& b) {
  return cell_relation(a, nonempty_a, b) != DomRelation::kNone;
}

// Domination restricted to the lower k dimensions: a sdom b with equal
// columns in every dimension >= k.
bool k_dominates(const CellIndex& a, bool nonempty_a, const CellIndex& b, int k);

// Key cells of one layer in enumeration order. Always includes the d
// auxiliary key cells of the layer.
struct KeyCellSet {
  int layer = 0;
  std::vector<CellIndex> cells;
};

// Layer 0 has a single in-grid cell, which is partially dominated by every
// auxiliary key cell; the key set of layer 0 is therefore the d auxiliary
// cells alone.
KeyCellSet layer0_key_cells(int dims);

}  // namespace skycell
