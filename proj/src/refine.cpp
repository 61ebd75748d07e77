#include "skycell/refine.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace skycell {

namespace {

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

double coord_sum(const PointSet& ps, uint32_t pos) {
  const auto p = ps.point(pos);
  double s = 0;
  for (double v : p) s += v;
  return s;
}

}  // namespace

std::vector<uint32_t> sfs_positions(const PointSet& ps, std::span<const uint32_t> positions) {
  std::vector<uint32_t> order(positions.begin(), positions.end());
  std::vector<double> sums(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sums[i] = coord_sum(ps, order[i]);

  std::vector<uint32_t> rank(order.size());
  std::iota(rank.begin(), rank.end(), 0u);
  std::sort(rank.begin(), rank.end(), [&](uint32_t x, uint32_t y) {
    if (sums[x] != sums[y]) return sums[x] < sums[y];
    return ps.ids[order[x]] < ps.ids[order[y]];
  });

  // A buffer member can never be dominated by a later point: domination
  // implies a strictly smaller coordinate sum.
  std::vector<uint32_t> buffer;
  for (uint32_t r : rank) {
    const uint32_t pos = order[r];
    const auto p = ps.point(pos);
    bool dominated = false;
    for (uint32_t b : buffer) {
      if (point_dominates(ps.point(b), p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) buffer.push_back(pos);
  }
  return buffer;
}

std::vector<uint32_t> sfs_skyline(const PointSet& ps) {
  std::vector<uint32_t> all(ps.n);
  std::iota(all.begin(), all.end(), 0u);
  std::vector<uint32_t> surv = sfs_positions(ps, all);
  std::vector<uint32_t> ids;
  ids.reserve(surv.size());
  for (uint32_t pos : surv) ids.push_back(ps.ids[pos]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

SkylineResult refine_skyline(const MultiLayerGrid& grid, const std::vector<CellIndex>& cs_rho,
                             ThreadPool& pool, bool merge_cross_cell) {
  WallTimer timer;
  SkylineResult result;
  const PointSet& ps = grid.points();

  // Phase 1: independent per-cell skylines, collected in cell order.
  std::vector<std::vector<uint32_t>> local(cs_rho.size());
  std::vector<CellRange> ranges(cs_rho.size());
  for (std::size_t c = 0; c < cs_rho.size(); ++c) ranges[c] = grid.range(cs_rho[c]);
  pool.parallel_for(cs_rho.size(), 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t c = lo; c < hi; ++c) {
      std::vector<uint32_t> positions(ranges[c].end - ranges[c].begin);
      std::iota(positions.begin(), positions.end(), ranges[c].begin);
      local[c] = sfs_positions(ps, positions);
    }
  });

  uint64_t examined = 0;
  std::vector<uint32_t> survivors;
  for (std::size_t c = 0; c < cs_rho.size(); ++c) {
    examined += ranges[c].end - ranges[c].begin;
    survivors.insert(survivors.end(), local[c].begin(), local[c].end());
  }
  result.points_examined = examined;

  // Phase 2: a global pass removes cross-cell dominated points.
  if (merge_cross_cell) survivors = sfs_positions(ps, survivors);

  result.ids.reserve(survivors.size());
  for (uint32_t pos : survivors) result.ids.push_back(ps.ids[pos]);
  std::sort(result.ids.begin(), result.ids.end());
  result.times.refine_ms = timer.ms();
  return result;
}

SkylineResult compute_skyline(const Dataset& ds, int rho, Mode mode, ThreadPool& pool,
                              bool merge_cross_cell) {
  WallTimer total;

  WallTimer t_norm;
  PointSet ps = normalize(ds);
  const double normalize_ms = t_norm.ms();

  WallTimer t_grid;
  MultiLayerGrid grid(std::move(ps), rho, &pool);
  const double grid_ms = t_grid.ms();

  StageTimes times;
  LayerCounts layers;
  std::vector<CellIndex> cs_rho;

  WallTimer t_shrink;
  if (mode == Mode::kSequential) {
    KeyCellSet ks = layer0_key_cells(grid.dims());
    for (int i = 0; i < rho; ++i) {
      WallTimer t_layer;
      ks = shrink_key_cells_seq(grid, i, ks);
      times.shrink_layer_ms.push_back(t_layer.ms());
      layers.keys.push_back(ks.cells.size());
      layers.candidates.push_back(-1);
    }
    cs_rho = expand_candidates(grid, ks, &pool);
    layers.candidates.back() = static_cast<int64_t>(cs_rho.size());
  } else {
    std::vector<CellIndex> cs{grid.origin_cell()};
    for (int i = 0; i < rho; ++i) {
      WallTimer t_layer;
      LayerShrinkResult step = shrink_key_cells_par(grid, i, cs, pool);
      cs = std::move(step.candidates);
      times.shrink_layer_ms.push_back(t_layer.ms());
      layers.keys.push_back(step.keys.cells.size());
      layers.candidates.push_back(static_cast<int64_t>(cs.size()));
    }
    cs_rho = std::move(cs);
  }
  const double shrink_ms = t_shrink.ms();

  SkylineResult result = refine_skyline(grid, cs_rho, pool, merge_cross_cell);
  result.times.normalize_ms = normalize_ms;
  result.times.grid_ms = grid_ms;
  result.times.shrink_ms = shrink_ms;
  result.times.shrink_layer_ms = std::move(times.shrink_layer_ms);
  result.times.total_ms = total.ms();
  result.layers = std::move(layers);
  return result;
}

SkylineResult quadrant_skyline(const Dataset& ds, std::span<const double> origin, int rho,
                               Mode mode, ThreadPool& pool) {
  if (static_cast<int>(origin.size()) != ds.d)
    throw UsageError("quadrant_skyline: origin arity does not match the dataset dimensionality");

  Dataset sub;
  sub.d = ds.d;
  std::vector<uint32_t> original_ids;
  for (uint32_t i = 0; i < ds.n; ++i) {
    const auto p = ds.point(i);
    bool inside = true;
    for (int k = 0; k < ds.d && inside; ++k) inside = p[k] >= origin[k];
    if (!inside) continue;
    sub.coords.insert(sub.coords.end(), p.begin(), p.end());
    original_ids.push_back(i);
  }
  sub.n = static_cast<uint32_t>(original_ids.size());
  if (sub.n == 0) return SkylineResult{};
  sub.compute_minmax();

  const int sub_rho = std::min(rho, std::max(1, MultiLayerGrid::default_rho(sub.n, sub.d)));
  SkylineResult result = compute_skyline(sub, sub_rho, mode, pool);
  for (uint32_t& id : result.ids) id = original_ids[id];
  return result;
}

}  // namespace skycell
