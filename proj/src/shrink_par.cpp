#include "skycell/shrink_par.hpp"

#include <algorithm>
#include <bit>

namespace skycell {

std::vector<CellIndex> split_candidates(const std::vector<CellIndex>& cs_i,
                                        const MultiLayerGrid& grid,
                                        std::vector<uint8_t>* nonempty_out) {
  const int d = grid.dims();
  const uint32_t fanout = uint32_t{1} << d;
  std::vector<CellIndex> children(cs_i.size() * fanout);
  for (std::size_t idx = 0; idx < cs_i.size(); ++idx)
    for (uint32_t v = 0; v < fanout; ++v) children[idx * fanout + v] = cs_i[idx].child(v);
  std::sort(children.begin(), children.end(),
            [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });
  if (nonempty_out) {
    nonempty_out->resize(children.size());
    for (std::size_t idx = 0; idx < children.size(); ++idx)
      (*nonempty_out)[idx] = grid.occupied(children[idx]) ? 1 : 0;
  }
  return children;
}

bool rotated_less(const CellIndex& a, const CellIndex& b, int rotation) {
  const int d = a.dims();
  for (int r = d - 1; r >= 0; --r) {
    const int dim = (r + rotation) % d;
    if (a.col(dim) != b.col(dim)) return a.col(dim) < b.col(dim);
  }
  return false;
}

bool two_dominates(const CellIndex& a, bool nonempty_a, const CellIndex& b, int rotation) {
  if (!nonempty_a) return false;
  const int d = a.dims();
  for (int dim = 0; dim < d; ++dim) {
    if (dim == rotation || dim == rotation + 1) continue;
    if (a.col(dim) != b.col(dim)) return false;
  }
  return a.col(rotation) <= b.col(rotation) && a.col(rotation + 1) <= b.col(rotation + 1);
}

namespace {

class TournamentTree {
 public:
  TournamentTree(const std::vector<CellIndex>& cells, const std::vector<uint8_t>& nonempty,
                 ThreadPool& pool)
      : cells_(cells), nonempty_(nonempty), pool_(pool) {
    leaves_ = std::bit_ceil(std::max<std::size_t>(cells.size(), 1));
    height_ = static_cast<int>(std::bit_width(leaves_) - 1);
    leaf_order_.resize(leaves_);
    for (std::size_t s = 0; s < leaves_; ++s)
      leaf_order_[s] = s < cells_.size() ? static_cast<int32_t>(s) : kSentinel;
    u_.resize(height_ + 1);
    l_.resize(height_ + 1);
    for (int j = 0; j <= height_; ++j) {
      u_[j].assign(leaves_ >> j, kSentinel);
      l_[j].assign(leaves_ >> j, kSentinel);
    }
  }

  void run(const TournamentObserver& observer) {
    const int d = cells_.empty() ? 2 : cells_[0].dims();
    const int rotations = std::max(1, d - 1);
    for (int m = 0; m < rotations; ++m) {
      if (m != 0) {
        // Carry each leaf's running winner into the next rotation, then
        // reorder leaves by the rotated column order. Sentinels stay inert
        // at the tail.
        for (std::size_t s = 0; s < leaves_; ++s)
          u_[0][s] = leaf_order_[s] == kSentinel ? kSentinel : l_[0][s];
        reorder(m);
      } else {
        for (std::size_t s = 0; s < leaves_; ++s) u_[0][s] = leaf_order_[s];
      }
      bottom_up(m);
      if (observer) observer(snapshot(m), false);
      top_down(m);
      if (observer) observer(snapshot(m), true);
    }
  }

  // Final per-leaf (cell, winner) pairs, sentinels excluded.
  std::vector<std::pair<int32_t, int32_t>> leaf_results() const {
    std::vector<std::pair<int32_t, int32_t>> out;
    out.reserve(cells_.size());
    for (std::size_t s = 0; s < leaves_; ++s)
      if (leaf_order_[s] != kSentinel) out.emplace_back(leaf_order_[s], l_[0][s]);
    return out;
  }

  static constexpr int32_t kSentinel = -1;

 private:
  bool nonempty_of(int32_t id) const { return id != kSentinel && nonempty_[id] != 0; }

  // The selector never returns a sentinel while a real reference exists.
  int32_t dom2_id(int32_t a, int32_t b, int m) const {
    if (a == kSentinel) return b;
    if (b == kSentinel) return a;
    return two_dominates(cells_[a], nonempty_of(a), cells_[b], m) ? a : b;
  }

  void reorder(int m) {
    // Sort leaf slots by the rotated order of their cells; u and l travel
    // with the leaf.
    std::vector<std::size_t> perm(leaves_);
    for (std::size_t s = 0; s < leaves_; ++s) perm[s] = s;
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
      const int32_t cx = leaf_order_[x], cy = leaf_order_[y];
      if (cx == kSentinel || cy == kSentinel) return cy == kSentinel && cx != kSentinel;
      return rotated_less(cells_[cx], cells_[cy], m);
    });
    std::vector<int32_t> order(leaves_), u0(leaves_), l0(leaves_);
    for (std::size_t s = 0; s < leaves_; ++s) {
      order[s] = leaf_order_[perm[s]];
      u0[s] = u_[0][perm[s]];
      l0[s] = l_[0][perm[s]];
    }
    leaf_order_.swap(order);
    u_[0].swap(u0);
    l_[0].swap(l0);
  }

  void bottom_up(int m) {
    for (int j = 1; j <= height_; ++j) {
      auto& up = u_[j];
      const auto& down = u_[j - 1];
      pool_.parallel_for(up.size(), 2048, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) up[k] = dom2_id(down[2 * k], down[2 * k + 1], m);
      });
    }
  }

  void top_down(int m) {
    l_[height_][0] = u_[height_][0];
    for (int j = height_ - 1; j >= 0; --j) {
      auto& cur = l_[j];
      const auto& above = l_[j + 1];
      const auto& own_u = u_[j];
      pool_.parallel_for(cur.size(), 2048, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
          if (k == 0)
            cur[k] = own_u[0];
          else if (k % 2 == 1)
            cur[k] = above[(k - 1) / 2];
          else
            cur[k] = dom2_id(above[k / 2 - 1], own_u[k], m);
        }
      });
    }
  }

  TournamentSnapshot snapshot(int m) const {
    TournamentSnapshot s;
    s.rotation = m;
    s.cells = &cells_;
    s.nonempty = &nonempty_;
    s.leaf_order = leaf_order_;
    s.u = u_;
    s.l = l_;
    return s;
  }

  const std::vector<CellIndex>& cells_;
  const std::vector<uint8_t>& nonempty_;
  ThreadPool& pool_;
  std::size_t leaves_ = 0;
  int height_ = 0;
  std::vector<int32_t> leaf_order_;
  std::vector<std::vector<int32_t>> u_, l_;
};

}  // namespace

LayerShrinkResult shrink_key_cells_par(const MultiLayerGrid& grid, int i,
                                       const std::vector<CellIndex>& cs_i, ThreadPool& pool,
                                       const TournamentObserver& observer) {
  if (i >= grid.rho()) throw UsageError("shrink_key_cells_par: layer index must be below rho");
  const int d = grid.dims();
  const int target = i + 1;

  std::vector<uint8_t> nonempty;
  const std::vector<CellIndex> children = split_candidates(cs_i, grid, &nonempty);

  TournamentTree tree(children, nonempty, pool);
  tree.run(observer);

  // A cell nothing 2-dominates in any rotation keeps itself as its winner,
  // so the unbeaten leaves form a superset of the key cells. The converse
  // fails: a pair whose differing dimensions are never co-checked by one
  // rotation (and have no non-empty cell bridging them) slips through the
  // pairwise selector. Every such false key is partially dominated by a
  // real key, which is itself unbeaten, so a sweep over the unbeaten set
  // alone separates the two exactly.
  std::vector<int32_t> unbeaten;  // l == o, non-empty
  std::vector<int32_t> pending;   // need the definition-level classification
  for (const auto& [cell_id, winner_id] : tree.leaf_results()) {
    if (!nonempty[cell_id]) continue;
    if (winner_id == cell_id) {
      unbeaten.push_back(cell_id);
      continue;
    }
    const bool winner_nonempty = winner_id != TournamentTree::kSentinel && nonempty[winner_id];
    const DomRelation rel =
        winner_id == TournamentTree::kSentinel
            ? DomRelation::kNone
            : cell_relation(children[winner_id], winner_nonempty, children[cell_id]);
    if (rel == DomRelation::kDominates) continue;  // certainly pruned
    pending.push_back(cell_id);
  }

  auto by_column_sum = [&](int32_t x, int32_t y) {
    int64_t sx = 0, sy = 0;
    for (int k = 0; k < d; ++k) {
      sx += children[x].col(k);
      sy += children[y].col(k);
    }
    return sx != sy ? sx < sy : lex_less(children[x], children[y]);
  };
  std::sort(unbeaten.begin(), unbeaten.end(), by_column_sum);
  std::vector<CellIndex> tree_keys;  // in-grid final keys, no top column
  for (int32_t id : unbeaten) {
    const CellIndex& cell = children[id];
    bool beaten = false;
    for (const CellIndex& k : tree_keys) {
      if (sdom(k, true, cell)) {
        beaten = true;
        break;
      }
    }
    // A top column means the auxiliary key cell of that dimension
    // partially dominates the cell and stands in as the key; the cell
    // itself is classified with the other survivors.
    if (beaten || cell.has_top_column())
      pending.push_back(id);
    else
      tree_keys.push_back(cell);
  }

  // Exact candidate classification against the key set: partially
  // dominated by some key, dominated by none.
  std::vector<CellIndex> keys_by_sum = tree_keys;  // already sum-ascending
  for (int j = 0; j < d; ++j) keys_by_sum.push_back(CellIndex::auxiliary(target, d, j));
  std::vector<uint8_t> keep(pending.size(), 0);
  pool.parallel_for(pending.size(), 256, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const CellIndex& cell = children[pending[idx]];
      bool pdomed = false, dominated = false;
      for (const CellIndex& k : keys_by_sum) {
        const DomRelation rel = cell_relation(k, true, cell);
        if (rel == DomRelation::kDominates) {
          dominated = true;
          break;
        }
        if (rel == DomRelation::kPartiallyDominates) pdomed = true;
      }
      keep[idx] = pdomed && !dominated;
    }
  });
  std::vector<CellIndex> candidates = tree_keys;
  for (std::size_t idx = 0; idx < pending.size(); ++idx)
    if (keep[idx]) candidates.push_back(children[pending[idx]]);
  std::sort(candidates.begin(), candidates.end(),
            [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });

  LayerShrinkResult out;
  out.keys.layer = target;
  out.keys.cells = std::move(tree_keys);
  for (int j = 0; j < d; ++j) out.keys.cells.push_back(CellIndex::auxiliary(target, d, j));
  std::sort(out.keys.cells.begin(), out.keys.cells.end(),
            [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });
  out.candidates = std::move(candidates);
  return out;
}

}  // namespace skycell
