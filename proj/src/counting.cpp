#include "skycell/counting.hpp"

#include <cmath>
#include <string>

namespace skycell {

namespace {

using u128 = unsigned __int128;

// Checked power into unsigned __int128; layer counting overflows 64 bits
// quickly for large i*d.
u128 ipow128(u128 base, int exp) {
  u128 r = 1;
  for (int e = 0; e < exp; ++e) r *= base;
  return r;
}

uint64_t narrow(u128 v, const char* what) {
  if (v > static_cast<u128>(UINT64_MAX))
    throw ConfigError(std::string(what) + ": count exceeds 64 bits");
  return static_cast<uint64_t>(v);
}

}  // namespace

uint64_t candidate_count(int d, int i) {
  if (d < 2 || i < 0) throw UsageError("candidate_count: d >= 2 and i >= 0 required");
  if (i * d > 126) throw ConfigError("candidate_count: i*d too large");
  const u128 side = (u128{1} << i) - 1;
  const u128 total = u128{1} << (i * d);
  return narrow(total - ipow128(side, d), "candidate_count");
}

uint64_t candidate_count_sum(int d, int i) {
  if (d < 2 || i < 0) throw UsageError("candidate_count_sum: d >= 2 and i >= 0 required");
  if (i * d > 126) throw ConfigError("candidate_count_sum: i*d too large");
  const u128 side = (u128{1} << i) - 1;
  u128 sum = 0;
  for (int j = 0; j <= d - 1; ++j) sum += ipow128(side, j) * ipow128(u128{1} << i, d - 1 - j);
  return narrow(sum, "candidate_count_sum");
}

double coverage_ratio(int d, int i) {
  if (d < 2 || i < 0) throw UsageError("coverage_ratio: d >= 2 and i >= 0 required");
  const double inner = 1.0 - std::ldexp(1.0, -i);  // (2^i - 1) / 2^i
  return 1.0 - std::pow(inner, d);
}

void for_each_auxiliary_candidate(int d, int i, const std::function<void(const CellIndex&)>& visit) {
  const int32_t top = (int32_t{1} << i) - 1;
  CellIndex c(i, d);
  int tops = (i == 0) ? d : 0;  // at layer 0 every column is the top column
  // Mixed-radix count over all 2^(i*d) cells, tracking how many columns sit
  // at the top value.
  for (;;) {
    if (tops > 0) visit(c);
    int s = d - 1;
    for (; s >= 0; --s) {
      const int32_t v = c.slot(s);
      if (v == top) {
        c.set_slot(s, 0);
        --tops;
        if (top == 0) ++tops;  // layer 0: resetting to 0 is still the top
      } else {
        c.set_slot(s, v + 1);
        if (v + 1 == top) ++tops;
        break;
      }
    }
    if (s < 0) return;
  }
}

uint64_t auxiliary_candidate_count(int d, int i) {
  uint64_t count = 0;
  for_each_auxiliary_candidate(d, i, [&](const CellIndex&) { ++count; });
  return count;
}

std::vector<CellIndex> auxiliary_candidates(int d, int i) {
  std::vector<CellIndex> out;
  for_each_auxiliary_candidate(d, i, [&](const CellIndex& c) { out.push_back(c); });
  return out;
}

}  // namespace skycell
