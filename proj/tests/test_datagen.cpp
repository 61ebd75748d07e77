#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "skycell/datagen.hpp"
#include "support.hpp"

using namespace skycell;

namespace {

double pearson(const Dataset& ds, int a, int b) {
  double ma = 0, mb = 0;
  for (uint32_t i = 0; i < ds.n; ++i) {
    ma += ds.coord(i, a);
    mb += ds.coord(i, b);
  }
  ma /= ds.n;
  mb /= ds.n;
  double cov = 0, va = 0, vb = 0;
  for (uint32_t i = 0; i < ds.n; ++i) {
    const double xa = ds.coord(i, a) - ma;
    const double xb = ds.coord(i, b) - mb;
    cov += xa * xb;
    va += xa * xa;
    vb += xb * xb;
  }
  return cov / std::sqrt(va * vb);
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/skycell_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("same spec yields identical bytes, serial or parallel") {
  GenSpec spec{Distribution::kAnticorrelated, 20000, 3, 42};
  const Dataset a = generate(spec);
  const Dataset b = generate(spec);
  CHECK(a.coords == b.coords);
  ThreadPool pool(4);
  const Dataset c = generate(spec, &pool);
  CHECK(a.coords == c.coords);
}

TEST_CASE("different seeds yield different data") {
  GenSpec spec{Distribution::kIndependent, 1000, 2, 1};
  const Dataset a = generate(spec);
  spec.seed = 2;
  const Dataset b = generate(spec);
  CHECK(a.coords != b.coords);
}

TEST_CASE("generated coordinates live in the unit cube") {
  for (const auto dist :
       {Distribution::kIndependent, Distribution::kCorrelated, Distribution::kAnticorrelated}) {
    const Dataset ds = generate(GenSpec{dist, 50000, 4, 7});
    for (double v : ds.coords) {
      CHECK(v >= 0.0);
      CHECK(v < 1.0);
    }
  }
}

TEST_CASE("independent dimensions have the uniform mean") {
  const Dataset ds = generate(GenSpec{Distribution::kIndependent, 100000, 2, 11});
  for (int k = 0; k < 2; ++k) {
    double mean = 0;
    for (uint32_t i = 0; i < ds.n; ++i) mean += ds.coord(i, k);
    mean /= ds.n;
    // 5 standard errors of a uniform mean at n = 1e5.
    CHECK(std::abs(mean - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / ds.n));
  }
}

TEST_CASE("correlated data has strongly positive correlation") {
  const Dataset ds = generate(GenSpec{Distribution::kCorrelated, 100000, 2, 12});
  CHECK(pearson(ds, 0, 1) > 0.5);
}

TEST_CASE("anticorrelated data has strongly negative correlation") {
  const Dataset ds = generate(GenSpec{Distribution::kAnticorrelated, 100000, 2, 13});
  CHECK(pearson(ds, 0, 1) < -0.5);
}

TEST_CASE("invalid generator specs are configuration errors") {
  CHECK_THROWS_AS(static_cast<void>(generate(GenSpec{Distribution::kIndependent, 0, 2, 1})), ConfigError);
  CHECK_THROWS_AS(static_cast<void>(generate(GenSpec{Distribution::kIndependent, 10, 1, 1})), ConfigError);
  CHECK_THROWS_AS(parse_distribution("normal"), ConfigError);
}

TEST_CASE("binary files round trip exactly") {
  const Dataset ds = generate(GenSpec{Distribution::kCorrelated, 5000, 3, 21});
  TempFile f("roundtrip.bin");
  write_bin(ds, f.path);
  const Dataset back = read_bin(f.path);
  CHECK(back.n == ds.n);
  CHECK(back.d == ds.d);
  CHECK(back.coords == ds.coords);
}

TEST_CASE("csv files parse points") {
  TempFile f("points.csv");
  {
    FILE* out = std::fopen(f.path.c_str(), "w");
    std::fputs("x,y\n0.63,0.08\n", out);
    std::fclose(out);
  }
  const Dataset ds = ingest_csv(f.path);
  CHECK(ds.n == 1);
  CHECK(ds.d == 2);
  CHECK(ds.coord(0, 0) == 0.63);
  CHECK(ds.coord(0, 1) == 0.08);
}

TEST_CASE("csv round trip preserves values") {
  const Dataset ds = generate(GenSpec{Distribution::kIndependent, 500, 4, 31});
  TempFile f("roundtrip.csv");
  write_csv(ds, f.path);
  const Dataset back = ingest_csv(f.path);
  CHECK(back.n == ds.n);
  CHECK(back.d == ds.d);
  CHECK(back.coords == ds.coords);
}

TEST_CASE("malformed csv rows name their line") {
  TempFile f("bad.csv");
  {
    FILE* out = std::fopen(f.path.c_str(), "w");
    std::fputs("x,y\nabc,0.5\n", out);
    std::fclose(out);
  }
  CHECK_THROWS_WITH_AS(static_cast<void>(ingest_csv(f.path)), doctest::Contains("line 2"), InputError);
}

TEST_CASE("csv rows with wrong arity name their line") {
  TempFile f("arity.csv");
  {
    FILE* out = std::fopen(f.path.c_str(), "w");
    std::fputs("x,y\n0.1,0.2\n0.3\n", out);
    std::fclose(out);
  }
  CHECK_THROWS_WITH_AS(static_cast<void>(ingest_csv(f.path)), doctest::Contains("line 3"), InputError);
}

TEST_CASE("bad magic is a format error") {
  TempFile f("bad.bin");
  {
    FILE* out = std::fopen(f.path.c_str(), "w");
    std::fputs("NOPE", out);
    std::fclose(out);
  }
  CHECK_THROWS_WITH_AS(static_cast<void>(read_bin(f.path)), doctest::Contains("magic"), InputError);
}

TEST_CASE("generators declare the unit normalization range") {
  const Dataset ds = generate(GenSpec{Distribution::kIndependent, 10, 2, 3});
  CHECK(ds.dim_min == std::vector<double>{0, 0});
  CHECK(ds.dim_max == std::vector<double>{1, 1});
}
