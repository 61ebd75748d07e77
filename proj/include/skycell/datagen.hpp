#pragma once

// Synthetic benchmark data in the three standard skyline distributions,
// plus CSV and binary dataset files.
//
// Reproducibility: values derive from xoshiro256++ streams seeded through
// splitmix64, with uniforms taken as (next() >> 11) * 2^-53 and normals via
// Box-Muller. No platform library distributions are involved, so a seed
// yields byte-identical datasets everywhere. Points are generated in
// blocks of 65536 with per-block streams; parallel generation keeps the
// output order.

#include <cstdint>
#include <string>
#include <vector>

#include "skycell/dataset.hpp"
#include "skycell/parallel.hpp"

namespace skycell {

struct SplitMix64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

class Xoshiro256pp {
 public:
  static Xoshiro256pp seeded(uint64_t seed) {
    SplitMix64 sm{seed};
    Xoshiro256pp rng;
    for (auto& word : rng.s_) word = sm.next();
    return rng;
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Box-Muller; consumes exactly two uniforms per draw.
  double normal(double mean, double stddev);

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4] = {};
};

enum class Distribution { kIndependent, kCorrelated, kAnticorrelated };

struct GenSpec {
  Distribution distribution = Distribution::kIndependent;
  uint64_t n = 0;
  int d = 0;
  uint64_t seed = 0;
};

// Deterministic under the spec; same spec, same bytes.
Dataset generate(const GenSpec& spec, ThreadPool* pool = nullptr);

Distribution parse_distribution(const std::string& name);
std::string distribution_name(Distribution dist);

// CSV: UTF-8, comma separated, header row naming d numeric columns, one
// point per line. Malformed rows are rejected with their 1-based line
// number.
Dataset ingest_csv(const std::string& path);
void write_csv(const Dataset& ds, const std::string& path);

// Binary: magic "SKYC", u32 version 1, u32 d, u64 n, then n*d IEEE-754
// doubles, row-major; all integers little-endian.
Dataset read_bin(const std::string& path);
void write_bin(const Dataset& ds, const std::string& path);

}  // namespace skycell
