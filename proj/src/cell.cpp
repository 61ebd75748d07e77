#include "skycell/cell.hpp"

#include <algorithm>
#include <sstream>

namespace skycell {

std::string CellIndex::to_string() const {
  std::ostringstream os;
  os << "L" << static_cast<int>(layer_) << "[";
  for (int s = 0; s < dims_; ++s) {
    if (s) os << ",";
    os << slots_[s];
  }
  os << "]";
  return os.str();
}

DomRelation cell_relation(const CellIndex& a, bool nonempty_a, const CellIndex& b) {
  if (a.layer() != b.layer() || a.dims() != b.dims())
    throw UsageError("cell_relation: cells must come from the same layer");
  if (!nonempty_a) return DomRelation::kNone;
  bool equal_somewhere = false;
  for (int s = 0; s < a.dims(); ++s) {
    if (a.slot(s) > b.slot(s)) return DomRelation::kNone;
    if (a.slot(s) == b.slot(s)) equal_somewhere = true;
  }
  return equal_somewhere ? DomRelation::kPartiallyDominates : DomRelation::kDominates;
}

bool k_dominates(const CellIndex& a, bool nonempty_a, const CellIndex& b, int k) {
  for (int dim = k; dim < a.dims(); ++dim)
    if (a.col(dim) != b.col(dim)) return false;
  return sdom(a, nonempty_a, b);
}

KeyCellSet layer0_key_cells(int dims) {
  KeyCellSet ks;
  ks.layer = 0;
  for (int j = 0; j < dims; ++j) ks.cells.push_back(CellIndex::auxiliary(0, dims, j));
  std::sort(ks.cells.begin(), ks.cells.end(),
            [](const CellIndex& a, const CellIndex& b) { return lex_less(a, b); });
  return ks;
}

}  // namespace skycell
