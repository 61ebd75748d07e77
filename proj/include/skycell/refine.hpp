#pragma once

// Skyline extraction from the bottom-layer candidate cells, the end-to-end
// driver, and quadrant queries.

#include <cstdint>
#include <span>
#include <vector>

#include "skycell/cell.hpp"
#include "skycell/dataset.hpp"
#include "skycell/grid.hpp"
#include "skycell/parallel.hpp"
#include "skycell/shrink_par.hpp"
#include "skycell/shrink_seq.hpp"

namespace skycell {

struct StageTimes {
  double normalize_ms = 0;
  double grid_ms = 0;
  double shrink_ms = 0;
  double refine_ms = 0;
  double total_ms = 0;
  std::vector<double> shrink_layer_ms;  // one entry per shrink step
};

struct LayerCounts {
  std::vector<uint64_t> keys;        // |KS_i| for i = 1..rho (auxiliary included)
  std::vector<int64_t> candidates;   // |CS_i| for i = 1..rho; -1 when not materialized
};

struct SkylineResult {
  std::vector<uint32_t> ids;  // original record ids, ascending
  StageTimes times;
  LayerCounts layers;
  uint64_t points_examined = 0;
};

enum class Mode { kSequential, kParallel };

// Sort-first skyline over arbitrary positions of a point set: sort by
// ascending coordinate sum (ties by record id), then compare each point
// against the buffer. The sort guarantees buffer members are final.
std::vector<uint32_t> sfs_positions(const PointSet& ps, std::span<const uint32_t> positions);

// SFS over a whole point set; returns original record ids, ascending.
std::vector<uint32_t> sfs_skyline(const PointSet& ps);

// Local skylines per candidate cell in parallel, then one global SFS pass
// over their union. The merge pass is required: a point in a key cell can
// dominate a point in a cell the key cell partially dominates, so local
// skylines alone may keep dominated points. merge_cross_cell exists so
// tests can demonstrate exactly that.
SkylineResult refine_skyline(const MultiLayerGrid& grid, const std::vector<CellIndex>& cs_rho,
                             ThreadPool& pool, bool merge_cross_cell = true);

// Full pipeline: normalize, build the grid, shrink key cells layer by
// layer (sequential or tournament), expand the bottom-layer candidates,
// refine. Both modes return the same point set.
SkylineResult compute_skyline(const Dataset& ds, int rho, Mode mode, ThreadPool& pool,
                      bool merge_cross_cell = true);

// Skyline of the points at or above `origin` in every dimension (origin in
// the dataset's raw coordinate space). Returned ids refer to the original
// records; an empty quadrant yields an empty result.
SkylineResult quadrant_skyline(const Dataset& ds, std::span<const double> origin, int rho,
                               Mode mode, ThreadPool& pool);

}  // namespace skycell
