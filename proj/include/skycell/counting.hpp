#pragma once

// Closed-form counting of candidate cells and the auxiliary candidate
// enumeration. Candidate cells of layer i number
// sum_{j=0}^{d-1} (2^i - 1)^j * 2^(i(d-1-j)) = 2^(i*d) - (2^i - 1)^d,
// independent of the data.

#include <cstdint>
#include <functional>
#include <vector>

#include "skycell/cell.hpp"

namespace skycell {

// Closed form 2^(i*d) - (2^i - 1)^d. Throws ConfigError when the count
// exceeds 64 bits.
uint64_t candidate_count(int d, int i);

// Geometric-series form; kept as the independent route for tests.
uint64_t candidate_count_sum(int d, int i);

// Fraction of the layer-i volume covered by candidate cells:
// 1 - (2^i - 1)^d / 2^(i*d). Strictly decreasing in i.
double coverage_ratio(int d, int i);

// Visits every layer-i cell having column 2^i - 1 in at least one
// dimension, in enumeration order.
void for_each_auxiliary_candidate(int d, int i, const std::function<void(const CellIndex&)>& visit);

// Count of the above, by exhaustive enumeration (no closed form); this is
// the independent side of the cardinality check against candidate_count.
uint64_t auxiliary_candidate_count(int d, int i);

// Materialized variant for small layers.
std::vector<CellIndex> auxiliary_candidates(int d, int i);

}  // namespace skycell
