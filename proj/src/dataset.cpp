#include "skycell/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace skycell {

void Dataset::compute_minmax() {
  dim_min.assign(d, std::numeric_limits<double>::infinity());
  dim_max.assign(d, -std::numeric_limits<double>::infinity());
  for (uint32_t i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      const double v = coord(i, k);
      dim_min[k] = std::min(dim_min[k], v);
      dim_max[k] = std::max(dim_max[k], v);
    }
  }
}

PointSet normalize(const Dataset& ds) {
  if (ds.n < 1) throw InputError("normalize: empty dataset");
  if (ds.d < 2) throw InputError("normalize: dimensionality must be at least 2");

  PointSet ps;
  ps.n = ds.n;
  ps.d = ds.d;
  ps.coords.resize(static_cast<size_t>(ds.n) * ds.d);
  ps.ids.resize(ds.n);

  std::vector<double> scale(ds.d);
  for (int k = 0; k < ds.d; ++k) {
    const double range = ds.dim_max[k] - ds.dim_min[k];
    scale[k] = range > 0 ? 1.0 / range : 0.0;
  }

  for (uint32_t i = 0; i < ds.n; ++i) {
    ps.ids[i] = i;
    for (int k = 0; k < ds.d; ++k) {
      const double v = ds.coord(i, k);
      if (!std::isfinite(v))
        throw InputError("normalize: non-finite coordinate in record " + std::to_string(i));
      double u = (v - ds.dim_min[k]) * scale[k];
      u = std::clamp(u, 0.0, kUnitUpperBound);
      ps.coords[static_cast<size_t>(i) * ds.d + k] = u;
    }
  }
  return ps;
}

}  // namespace skycell
