#include "skycell/bijection.hpp"

#include <algorithm>
#include <limits>

namespace skycell {

int highest_equal_dim(const CellIndex& c, const CellIndex& ck) {
  for (int dim = c.dims() - 1; dim >= 0; --dim)
    if (c.col(dim) == ck.col(dim)) return dim;
  return -1;
}

CellIndex psi_map(const CellIndex& c, const std::vector<CellIndex>& key_cells) {
  if (c.is_auxiliary()) return c;
  int min_dim = std::numeric_limits<int>::max();
  for (const CellIndex& ck : key_cells) {
    if (cell_relation(ck, true, c) != DomRelation::kPartiallyDominates) continue;
    min_dim = std::min(min_dim, highest_equal_dim(c, ck));
  }
  if (min_dim == std::numeric_limits<int>::max())
    throw UsageError("psi_map: cell is not partially dominated by any key cell");
  CellIndex ca = c;
  ca.set_col(min_dim, c.top_column());
  return ca;
}

CellIndex theta_map(const CellIndex& ca, const std::vector<CellIndex>& key_cells) {
  if (ca.is_auxiliary()) return ca;
  int gamma = -1;
  for (int dim = 0; dim < ca.dims(); ++dim) {
    if (ca.col(dim) == ca.top_column()) {
      gamma = dim;
      break;
    }
  }
  if (gamma < 0) throw UsageError("theta_map: cell has no top column");

  int32_t phi = std::numeric_limits<int32_t>::max();
  for (const CellIndex& ck : key_cells) {
    bool qualifies = true;
    for (int dim = 0; dim < ca.dims() && qualifies; ++dim) {
      if (dim <= gamma)
        qualifies = ck.col(dim) <= ca.col(dim);
      else
        qualifies = ck.col(dim) < ca.col(dim);
    }
    if (qualifies) phi = std::min(phi, ck.col(gamma));
  }
  CellIndex c = ca;
  c.set_col(gamma, phi);
  return c;
}

}  // namespace skycell
