#pragma once

// Point-level types: raw datasets, unit-cube point sets, normalization.

#include <cstdint>
#include <span>
#include <vector>

#include "skycell/error.hpp"

namespace skycell {

// Largest value a normalized coordinate may take; floor(v * 2^i) then never
// reaches 2^i, keeping the half-open unit cube assumption operational.
inline constexpr double kUnitUpperBound = 1.0 - 0x1p-32;

// Raw input records. Record ids are implicit array positions. dim_min and
// dim_max declare the normalization range per dimension; generators declare
// [0, 1), file ingestion computes the observed extremes.
struct Dataset {
  uint32_t n = 0;
  int d = 0;
  std::vector<double> coords;  // row-major, n * d
  std::vector<double> dim_min;
  std::vector<double> dim_max;

  double coord(uint32_t i, int k) const { return coords[static_cast<size_t>(i) * d + k]; }
  std::span<const double> point(uint32_t i) const {
    return {coords.data() + static_cast<size_t>(i) * d, static_cast<size_t>(d)};
  }
  void compute_minmax();
};

// Normalized points in [0, 1)^d. `ids[pos]` is the original record id of the
// point at array position `pos`; grid construction permutes positions.
struct PointSet {
  uint32_t n = 0;
  int d = 0;
  std::vector<double> coords;  // row-major, n * d
  std::vector<uint32_t> ids;

  std::span<const double> point(uint32_t pos) const {
    return {coords.data() + static_cast<size_t>(pos) * d, static_cast<size_t>(d)};
  }
  double coord(uint32_t pos, int k) const { return coords[static_cast<size_t>(pos) * d + k]; }
};

// Min-max rescaling into the unit cube. Coordinates map by
// (v - min_k) / (max_k - min_k), clamped to [0, 1 - 2^-32]; a degenerate
// dimension (max == min) maps to 0. Non-finite input is rejected with the
// offending record id.
PointSet normalize(const Dataset& ds);

// p dominates q: no worse anywhere, strictly better somewhere.
inline bool point_dominates(std::span<const double> p, std::span<const double> q) {
  bool strict = false;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] > q[k]) return false;
    if (p[k] < q[k]) strict = true;
  }
  return strict;
}

}  // namespace skycell
