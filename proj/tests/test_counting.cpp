#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unordered_set>

#include "skycell/baseline.hpp"
#include "skycell/bijection.hpp"
#include "skycell/counting.hpp"
#include "support.hpp"

using namespace skycell;
using skycell::testing::cell;
using skycell::testing::random_dataset;

TEST_CASE("candidate cell counts in two dimensions") {
  const uint64_t expected[] = {1, 3, 7, 15, 31, 63};
  for (int i = 0; i <= 5; ++i) CHECK(candidate_count(2, i) == expected[i]);
}

TEST_CASE("closed form equals the geometric sum") {
  for (int d = 2; d <= 8; ++d)
    for (int i = 0; i <= 7; ++i) CHECK(candidate_count(d, i) == candidate_count_sum(d, i));
}

TEST_CASE("single cell layers") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(candidate_count(d, 0) == 1);
    CHECK(coverage_ratio(d, 0) == doctest::Approx(1.0));
  }
}

TEST_CASE("counting overflow is an explicit error") {
  CHECK_THROWS_AS(candidate_count(10, 13), ConfigError);
}

TEST_CASE("coverage ratio values and monotone decrease") {
  CHECK(coverage_ratio(2, 3) == doctest::Approx(15.0 / 64.0));
  CHECK(coverage_ratio(2, 5) == doctest::Approx(63.0 / 1024.0));
  for (int d = 2; d <= 10; ++d)
    for (int i = 0; i <= 12; ++i) CHECK(coverage_ratio(d, i) > coverage_ratio(d, i + 1));
}

TEST_CASE("auxiliary candidates are the top slices") {
  // 4x4 grid: top row plus rightmost column, 16 - 9 = 7 cells.
  const auto cells = auxiliary_candidates(2, 2);
  CHECK(cells.size() == 7);
  for (const CellIndex& c : cells) CHECK(c.has_top_column());
  CHECK(auxiliary_candidate_count(2, 4) == 31);
  CHECK(auxiliary_candidate_count(3, 0) == 1);
}

TEST_CASE("auxiliary candidate enumeration matches the closed form") {
  for (int d = 2; d <= 5; ++d)
    for (int i = 0; i <= 4; ++i) CHECK(auxiliary_candidate_count(d, i) == candidate_count(d, i));
}

TEST_CASE("forward map on the worked example") {
  const std::vector<CellIndex> keys = {cell(4, {1, 6}), cell(4, {4, 4})};
  CHECK(psi_map(cell(4, {4, 6}), keys) == cell(4, {4, 15}));
}

TEST_CASE("backward map on the worked example") {
  const std::vector<CellIndex> keys = {cell(4, {1, 6}), cell(4, {0, 10})};
  CHECK(theta_map(cell(4, {4, 15}), keys) == cell(4, {4, 6}));
}

TEST_CASE("auxiliary key cells map to themselves both ways") {
  const std::vector<CellIndex> keys = {CellIndex::auxiliary(3, 2, 0), CellIndex::auxiliary(3, 2, 1)};
  for (const CellIndex& a : keys) {
    CHECK(psi_map(a, keys) == a);
    CHECK(theta_map(a, keys) == a);
  }
}

TEST_CASE("forward map fixes cells already in their top slice") {
  // A candidate whose minimal shared dimension already holds the top
  // column maps to itself.
  const std::vector<CellIndex> keys = {cell(3, {0, 7})};
  CHECK(psi_map(cell(3, {5, 7}), keys) == cell(3, {5, 7}));
}

TEST_CASE("forward map without a partially dominating key is an error") {
  const std::vector<CellIndex> keys = {cell(3, {0, 0})};
  CHECK_THROWS_AS(psi_map(cell(3, {4, 5}), keys), UsageError);
}

TEST_CASE("round trip over the candidate cells of random grids") {
  int grids = 0;
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    const int d = 2 + static_cast<int>(seed % 3);
    const int rho = 1 + static_cast<int>(seed % 4);
    const Dataset ds =
        random_dataset(seed % 2 ? Distribution::kIndependent : Distribution::kAnticorrelated,
                       50 + 40 * seed, d, seed * 77);
    const MultiLayerGrid grid(normalize(ds), rho);
    ++grids;
    for (int layer = 1; layer <= rho; ++layer) {
      const KeyCellSet ks = key_cells_oracle(grid, layer);
      const auto candidates = candidate_cells_oracle(grid, layer, /*include_empty=*/true);
      // The structural count is data independent.
      CHECK(candidates.size() == candidate_count(d, layer));
      std::unordered_set<CellIndex, CellIndexHash> images;
      for (const CellIndex& c : candidates) {
        const CellIndex image = psi_map(c, ks.cells);
        CHECK(image.has_top_column());  // lands in the auxiliary candidate set
        CHECK(images.insert(image).second);  // injective
        CHECK(theta_map(image, ks.cells) == c);
      }
      // Same cardinality as the auxiliary candidates: a bijection.
      CHECK(images.size() == auxiliary_candidate_count(d, layer));
    }
  }
  CHECK(grids == 12);
}
