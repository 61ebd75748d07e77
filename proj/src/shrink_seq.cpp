#include "skycell/shrink_seq.hpp"

#include <algorithm>
#include <limits>

namespace skycell {

namespace {
constexpr std::size_t kDenseTableLimit = std::size_t{1} << 22;
}

BoundTable::BoundTable(int prefix_len, int32_t lo, int32_t hi, int32_t default_value)
    : default_(default_value), radix_(hi - lo + 1) {
  double slots = 1.0;
  for (int s = 0; s < prefix_len; ++s) slots *= radix_;
  dense_ = slots <= static_cast<double>(kDenseTableLimit);
  if (dense_) flat_.assign(static_cast<std::size_t>(slots), default_value);
}

int32_t BoundTable::get(uint64_t offset) const {
  if (dense_) return flat_[offset];
  auto it = sparse_.find(offset);
  return it == sparse_.end() ? default_ : it->second;
}

void BoundTable::set(uint64_t offset, int32_t value) {
  if (dense_)
    flat_[offset] = value;
  else
    sparse_[offset] = value;
}

namespace {

// Ascending mixed-radix enumeration of column prefixes [col(d-1), ...,
// col(1)], each component in [lo, hi]. Offsets advance by one per step;
// predecessor offsets (one column decremented) differ by a fixed stride.
class PrefixEnumerator {
 public:
  PrefixEnumerator(int len, int32_t lo, int32_t hi) : lo_(lo), hi_(hi), cols_(len, lo), offset_(0) {
    strides_.resize(len);
    uint64_t s = 1;
    for (int slot = len - 1; slot >= 0; --slot) {
      strides_[slot] = s;
      s *= static_cast<uint64_t>(hi - lo + 1);
    }
    total_ = s;
  }

  // Component of dimension dim (dim in [1, len]); slot 0 is dimension len.
  int32_t col_of_dim(int dim) const { return cols_[cols_.size() - dim]; }
  const std::vector<int32_t>& slots() const { return cols_; }
  uint64_t offset() const { return offset_; }
  uint64_t total() const { return total_; }
  uint64_t pred_offset_of_dim(int dim) const { return offset_ - strides_[cols_.size() - dim]; }

  bool advance() {
    ++offset_;
    for (int slot = static_cast<int>(cols_.size()) - 1; slot >= 0; --slot) {
      if (cols_[slot] < hi_) {
        ++cols_[slot];
        return true;
      }
      cols_[slot] = lo_;
    }
    return false;
  }

 private:
  int32_t lo_, hi_;
  std::vector<int32_t> cols_;
  std::vector<uint64_t> strides_;
  uint64_t offset_;
  uint64_t total_;
};

// Offset of a key cell's doubled prefix in the enumerator's space.
uint64_t doubled_prefix_offset(const CellIndex& ck, int32_t lo, int32_t radix) {
  uint64_t off = 0;
  for (int dim = ck.dims() - 1; dim >= 1; --dim)
    off = off * radix + static_cast<uint64_t>(2 * ck.col(dim) - lo);
  return off;
}

}  // namespace

KeyCellSet shrink_key_cells_seq(const MultiLayerGrid& grid, int i, const KeyCellSet& ks_i,
                                ShrinkSeqTrace* trace) {
  if (i >= grid.rho()) throw UsageError("shrink_key_cells_seq: layer index must be below rho");
  const int d = grid.dims();
  const int target = i + 1;
  const int32_t hi = (int32_t{1} << target) - 1;
  const int32_t lo = -2;  // layer-i auxiliary columns double to -2

  BoundTables tables{BoundTable(d - 1, lo, hi, 0), BoundTable(d - 1, lo, hi, hi)};

  // Doubled prefixes of the incoming key cells, in enumeration order.
  std::vector<uint64_t> key_prefix(ks_i.cells.size());
  std::vector<int32_t> key_col0(ks_i.cells.size());
  for (std::size_t j = 0; j < ks_i.cells.size(); ++j) {
    key_prefix[j] = doubled_prefix_offset(ks_i.cells[j], lo, tables.gs.radix());
    key_col0[j] = 2 * ks_i.cells[j].col(0);
  }

  KeyCellSet out;
  out.layer = target;
  std::size_t cursor = 0;

  PrefixEnumerator prefix(d - 1, lo, hi);
  do {
    const uint64_t off = prefix.offset();

    // A prefix overlapping the next key cell's split starts at the doubled
    // column: everything below it in this slice is provably empty. The
    // seed is authoritative for its row; predecessor bounds only flow into
    // unseeded rows, where the minimum over the d-1 predecessor prefixes
    // carries every seed forward along component-wise chains.
    bool seeded = false;
    if (cursor < key_prefix.size() && off == key_prefix[cursor]) {
      tables.gs.set(off, key_col0[cursor]);
      seeded = true;
      ++cursor;
    }

    int32_t min_gs = std::numeric_limits<int32_t>::max();
    int32_t min_ge = std::numeric_limits<int32_t>::max();
    bool any_pred = false;
    for (int dim = 1; dim <= d - 1; ++dim) {
      if (prefix.col_of_dim(dim) == lo) continue;
      const uint64_t pred = prefix.pred_offset_of_dim(dim);
      min_gs = std::min(min_gs, tables.gs.get(pred));
      min_ge = std::min(min_ge, tables.ge.get(pred));
      any_pred = true;
    }
    if (any_pred) {
      if (!seeded) tables.gs.set(off, min_gs);
      tables.ge.set(off, min_ge);
    }

    // Auxiliary key cells materialize as soon as their prefix comes up:
    // all -1 columns yield the dimension-0 cell, a single top column among
    // -1s yields that dimension's cell.
    int minus_ones = 0, tops = 0, top_dim = -1;
    for (int dim = 1; dim <= d - 1; ++dim) {
      const int32_t v = prefix.col_of_dim(dim);
      if (v == -1) ++minus_ones;
      if (v == hi) {
        ++tops;
        top_dim = dim;
      }
    }
    if (minus_ones == d - 1) {
      out.cells.push_back(CellIndex::auxiliary(target, d, 0));
      continue;
    }
    if (tops == 1 && minus_ones == d - 2) {
      out.cells.push_back(CellIndex::auxiliary(target, d, top_dim));
      continue;
    }

    // Regular slice: scan the bounded dimension-0 window for its first
    // non-empty cell.
    bool negative = false;
    for (int dim = 1; dim <= d - 1; ++dim)
      if (prefix.col_of_dim(dim) < 0) negative = true;
    if (negative) continue;

    const int32_t gs = tables.gs.get(off);
    const int32_t ge = tables.ge.get(off);
    for (int32_t cl0 = gs; cl0 <= ge; ++cl0) {
      CellIndex cell(target, d);
      for (int dim = 1; dim <= d - 1; ++dim) cell.set_col(dim, prefix.col_of_dim(dim));
      cell.set_col(0, cl0);
      if (trace && trace->on_probe) trace->on_probe(cell);
      if (!grid.occupied(cell)) continue;
      tables.ge.set(off, cl0 - 1);
      // A found cell touching the top column is partially dominated by the
      // auxiliary key cell of that dimension, which stands in for it.
      if (!cell.has_top_column()) {
        out.cells.push_back(cell);
        if (trace && trace->on_append) trace->on_append(cell, gs, ge);
      }
      break;
    }
  } while (prefix.advance());

  return out;
}

std::vector<CellIndex> expand_candidates(const MultiLayerGrid& grid, const KeyCellSet& ks,
                                         ThreadPool* pool) {
  const std::vector<CellIndex> cells = grid.nonempty_cells(ks.layer);

  // Keys sorted by ascending column sum: most dominated cells meet a
  // dominating key within the first few probes.
  std::vector<CellIndex> keys = ks.cells;
  std::sort(keys.begin(), keys.end(), [](const CellIndex& a, const CellIndex& b) {
    int64_t sa = 0, sb = 0;
    for (int k = 0; k < a.dims(); ++k) {
      sa += a.col(k);
      sb += b.col(k);
    }
    return sa != sb ? sa < sb : lex_less(a, b);
  });

  std::vector<uint8_t> keep(cells.size(), 0);
  auto classify = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const CellIndex& c = cells[idx];
      bool pdomed = false, domed = false;
      for (const CellIndex& k : keys) {
        const DomRelation rel = cell_relation(k, true, c);
        if (rel == DomRelation::kDominates) {
          domed = true;
          break;
        }
        if (rel == DomRelation::kPartiallyDominates) pdomed = true;
      }
      keep[idx] = pdomed && !domed;
    }
  };
  if (pool != nullptr)
    pool->parallel_for(cells.size(), 512, classify);
  else
    classify(0, cells.size());

  std::vector<CellIndex> out;
  for (std::size_t idx = 0; idx < cells.size(); ++idx)
    if (keep[idx]) out.push_back(cells[idx]);
  return out;  // nonempty_cells is ascending already
}

}  // namespace skycell
