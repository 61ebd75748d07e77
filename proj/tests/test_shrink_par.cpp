#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "skycell/baseline.hpp"
#include "skycell/shrink_par.hpp"
#include "skycell/shrink_seq.hpp"
#include "support.hpp"

using namespace skycell;
using skycell::testing::cell;
using skycell::testing::make_dataset;
using skycell::testing::random_dataset;

namespace {

// Brute-force reduction selector over an ordered cell list: the cell that
// k-dominates the last cell and is k-dominated by no other. Ambiguous when
// several qualify; returns all of them.
std::vector<int32_t> selector_candidates(const std::vector<CellIndex>& cells,
                                         const std::vector<uint8_t>& nonempty,
                                         const std::vector<int32_t>& list, int k) {
  std::vector<int32_t> out;
  if (list.empty() || list.back() < 0) return out;  // sentinel tail: nothing to check
  const int32_t last = list.back();
  for (int32_t a : list) {
    if (a < 0) continue;
    if (!k_dominates(cells[a], nonempty[a], cells[last], k)) continue;
    bool beaten = false;
    for (int32_t b : list) {
      if (b < 0 || b == a) continue;
      if (k_dominates(cells[b], nonempty[b], cells[a], k)) {
        beaten = true;
        break;
      }
    }
    if (!beaten) out.push_back(a);
  }
  return out;
}

struct RotatedView {
  // Cell columns permuted so that rotation-m k-domination becomes the
  // canonical one: rotated dimension r holds original dimension (r+m)%d.
  static CellIndex remap(const CellIndex& c, int m) {
    CellIndex r(c.layer(), c.dims());
    for (int dim = 0; dim < c.dims(); ++dim) r.set_col(dim, c.col((dim + m) % c.dims()));
    return r;
  }
};

}  // namespace

TEST_CASE("split covers each candidate with its full fanout") {
  Dataset ds = make_dataset({{0.1, 0.9}, {0.6, 0.2}, {0.3, 0.4}});
  ds.dim_min = {0, 0};
  ds.dim_max = {1, 1};
  const MultiLayerGrid grid(normalize(ds), 2);
  const auto cs1 = candidate_cells_oracle(grid, 1, false);
  std::vector<uint8_t> nonempty;
  const auto children = split_candidates(cs1, grid, &nonempty);
  CHECK(children.size() == 4 * cs1.size());
  for (std::size_t idx = 1; idx < children.size(); ++idx)
    CHECK(lex_less(children[idx - 1], children[idx]));
  for (std::size_t idx = 0; idx < children.size(); ++idx)
    CHECK(nonempty[idx] == (grid.occupied(children[idx]) ? 1 : 0));
}

TEST_CASE("pairwise selector basics") {
  // An empty first cell never wins.
  CHECK(dom2(cell(3, {0, 0}), false, cell(3, {0, 1}), 0) == cell(3, {0, 1}));
  // A cell ties with itself through self partial domination.
  const CellIndex c = cell(3, {2, 5});
  CHECK(dom2(c, true, c, 0) == c);
  CHECK(dom2(cell(2, {0, 1}), true, cell(2, {0, 3}), 0) == cell(2, {0, 1}));
  // Incomparable pairs keep the later cell.
  CHECK(dom2(cell(2, {0, 3}), true, cell(2, {1, 0}), 0) == cell(2, {1, 0}));
  // Rotation 1 of a 3-d layer compares dimensions 1 and 2, equal elsewhere.
  CHECK(two_dominates(cell(2, {1, 2, 0}), true, cell(2, {3, 2, 0}), 1));
  CHECK(!two_dominates(cell(2, {1, 2, 0}), true, cell(2, {3, 2, 1}), 1));
}

TEST_CASE("parallel shrink equals the oracles layer by layer") {
  ThreadPool pool(2);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto dist = static_cast<Distribution>(seed % 3);
    const int d = 2 + static_cast<int>(seed % 4);
    const int rho = 1 + static_cast<int>((seed / 2) % 4);
    const Dataset ds = random_dataset(dist, 400 + 250 * seed, d, 7000 + seed);
    const MultiLayerGrid grid(normalize(ds), rho);
    std::vector<CellIndex> cs{grid.origin_cell()};
    for (int i = 0; i < rho; ++i) {
      const LayerShrinkResult step = shrink_key_cells_par(grid, i, cs, pool);
      REQUIRE(step.keys.cells == key_cells_oracle(grid, i + 1).cells);
      REQUIRE(step.candidates == candidate_cells_oracle(grid, i + 1, false));
      cs = step.candidates;
    }
  }
}

TEST_CASE("parallel and sequential shrinks agree") {
  ThreadPool pool(4);
  for (uint64_t seed = 0; seed < 6; ++seed) {
    const auto dist = static_cast<Distribution>((seed + 2) % 3);
    const int d = 2 + static_cast<int>(seed % 3);
    const int rho = 2 + static_cast<int>(seed % 2);
    const Dataset ds = random_dataset(dist, 1500, d, 8100 + seed);
    const MultiLayerGrid grid(normalize(ds), rho);

    KeyCellSet ks = layer0_key_cells(d);
    std::vector<CellIndex> cs{grid.origin_cell()};
    for (int i = 0; i < rho; ++i) {
      ks = shrink_key_cells_seq(grid, i, ks);
      const LayerShrinkResult step = shrink_key_cells_par(grid, i, cs, pool);
      CHECK(step.keys.cells == ks.cells);
      CHECK(step.candidates == expand_candidates(grid, ks));
      cs = step.candidates;
    }
  }
}

TEST_CASE("identical results for every worker count") {
  const Dataset ds = random_dataset(Distribution::kIndependent, 3000, 3, 555);
  const MultiLayerGrid grid(normalize(ds), 3);
  std::optional<LayerShrinkResult> reference;
  for (unsigned workers : {1u, 2u, 8u}) {
    ThreadPool pool(workers);
    std::vector<CellIndex> cs{grid.origin_cell()};
    LayerShrinkResult last;
    for (int i = 0; i < 3; ++i) {
      last = shrink_key_cells_par(grid, i, cs, pool);
      cs = last.candidates;
    }
    if (!reference) {
      reference = last;
    } else {
      CHECK(last.keys.cells == reference->keys.cells);
      CHECK(last.candidates == reference->candidates);
    }
  }
}

TEST_CASE("bottom-up winners satisfy the reduction selector") {
  ThreadPool pool(1);
  const Dataset ds = random_dataset(Distribution::kAnticorrelated, 300, 3, 77);
  const MultiLayerGrid grid(normalize(ds), 2);
  std::vector<CellIndex> cs{grid.origin_cell()};
  for (int i = 0; i < 2; ++i) {
    int checked = 0;
    TournamentObserver observer = [&](const TournamentSnapshot& snap, bool after_top_down) {
      if (after_top_down || snap.rotation != 0) return;
      // Every node's upper slot must be a valid selector outcome over the
      // leaves of its subtree.
      for (std::size_t level = 0; level < snap.u.size(); ++level) {
        for (std::size_t k = 0; k < snap.u[level].size(); ++k) {
          std::vector<int32_t> range(snap.leaf_order.begin() + (k << level),
                                     snap.leaf_order.begin() + ((k + 1) << level));
          const auto valid = selector_candidates(*snap.cells, *snap.nonempty, range, 2);
          if (valid.empty()) continue;  // nothing 2-dominates the range's last cell
          ++checked;
          CHECK(std::find(valid.begin(), valid.end(), snap.u[level][k]) != valid.end());
        }
      }
    };
    const LayerShrinkResult step = shrink_key_cells_par(grid, i, cs, pool, observer);
    CHECK(checked > 0);
    cs = step.candidates;
  }
}

TEST_CASE("leaf winners match the prefix selector after each rotation") {
  ThreadPool pool(1);
  const Dataset ds = random_dataset(Distribution::kIndependent, 250, 3, 78);
  const MultiLayerGrid grid(normalize(ds), 2);
  std::vector<CellIndex> cs{grid.origin_cell()};
  for (int i = 0; i < 2; ++i) {
    int checked = 0;
    TournamentObserver observer = [&](const TournamentSnapshot& snap, bool after_top_down) {
      if (!after_top_down) return;
      const int m = snap.rotation;
      // Under the rotation-m remap, the leaf's lower slot must be a valid
      // (m+2)-domination selector over its whole prefix.
      for (std::size_t leaf = 0; leaf < snap.leaf_order.size(); ++leaf) {
        if (snap.leaf_order[leaf] < 0) continue;
        std::vector<CellIndex> remapped;
        std::vector<uint8_t> ne;
        std::vector<int32_t> list;
        for (std::size_t p = 0; p <= leaf; ++p) {
          const int32_t id = snap.leaf_order[p];
          if (id < 0) continue;
          remapped.push_back(RotatedView::remap((*snap.cells)[id], m));
          ne.push_back((*snap.nonempty)[id]);
          list.push_back(static_cast<int32_t>(remapped.size()) - 1);
        }
        const auto valid = selector_candidates(remapped, ne, list, m + 2);
        if (valid.empty()) continue;
        ++checked;
        // Translate the winner into the remapped numbering.
        const int32_t want = snap.l[0][leaf];
        bool ok = false;
        for (int32_t v : valid) {
          int32_t original = -1, seen = -1;
          for (std::size_t p = 0; p <= leaf; ++p) {
            if (snap.leaf_order[p] < 0) continue;
            if (++seen == v) {
              original = snap.leaf_order[p];
              break;
            }
          }
          ok |= original == want;
        }
        CHECK(ok);
      }
    };
    const LayerShrinkResult step = shrink_key_cells_par(grid, i, cs, pool, observer);
    CHECK(checked > 0);
    cs = step.candidates;
  }
}

TEST_CASE("two dimensions use a single rotation") {
  ThreadPool pool(1);
  const Dataset ds = random_dataset(Distribution::kCorrelated, 500, 2, 12);
  const MultiLayerGrid grid(normalize(ds), 2);
  int rotations_seen = 0;
  TournamentObserver observer = [&](const TournamentSnapshot& snap, bool after_top_down) {
    if (after_top_down) rotations_seen = std::max(rotations_seen, snap.rotation + 1);
  };
  std::vector<CellIndex> cs{grid.origin_cell()};
  const LayerShrinkResult step = shrink_key_cells_par(grid, 0, cs, pool, observer);
  CHECK(rotations_seen == 1);
  CHECK(step.keys.cells == key_cells_oracle(grid, 1).cells);
}
