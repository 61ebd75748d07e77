#include "skycell/datagen.hpp"

#include "skycell/cell.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>

namespace skycell {

namespace {

constexpr uint64_t kBlockSize = 65536;
constexpr double kJitterStddev = 0.05;

double clamp_unit(double v) { return std::clamp(v, 0.0, kUnitUpperBound); }

void generate_block(const GenSpec& spec, uint64_t block, double* out, uint64_t count) {
  Xoshiro256pp rng = Xoshiro256pp::seeded(spec.seed ^ ((block + 1) * 0x9e3779b97f4a7c15ull));
  const int d = spec.d;
  for (uint64_t p = 0; p < count; ++p) {
    double* row = out + p * d;
    switch (spec.distribution) {
      case Distribution::kIndependent:
        for (int k = 0; k < d; ++k) row[k] = rng.uniform01();
        break;
      case Distribution::kCorrelated: {
        // One shared position along the diagonal, jittered per axis.
        const double t = rng.uniform01();
        for (int k = 0; k < d; ++k) row[k] = clamp_unit(t + rng.normal(0.0, kJitterStddev));
        break;
      }
      case Distribution::kAnticorrelated: {
        // Project a uniform point onto the plane sum(x) = d/2 along the
        // diagonal, then jitter per axis.
        double sum = 0;
        for (int k = 0; k < d; ++k) {
          row[k] = rng.uniform01();
          sum += row[k];
        }
        const double shift = (d / 2.0 - sum) / d;
        for (int k = 0; k < d; ++k) row[k] = clamp_unit(row[k] + shift + rng.normal(0.0, kJitterStddev));
        break;
      }
    }
  }
}

}  // namespace

double Xoshiro256pp::normal(double mean, double stddev) {
  const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = uniform01();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * mag * std::cos(2.0 * std::numbers::pi * u2);
}

Dataset generate(const GenSpec& spec, ThreadPool* pool) {
  if (spec.n < 1) throw ConfigError("generate: n must be at least 1");
  if (spec.d < 2) throw ConfigError("generate: d must be at least 2");
  if (spec.d > kMaxDims) throw ConfigError("generate: d must be at most " + std::to_string(kMaxDims));

  Dataset ds;
  ds.n = static_cast<uint32_t>(spec.n);
  ds.d = spec.d;
  ds.coords.resize(spec.n * spec.d);
  ds.dim_min.assign(spec.d, 0.0);  // declared unit range; no re-scaling on normalize
  ds.dim_max.assign(spec.d, 1.0);

  const uint64_t blocks = (spec.n + kBlockSize - 1) / kBlockSize;
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t b = lo; b < hi; ++b) {
      const uint64_t begin = b * kBlockSize;
      const uint64_t count = std::min(kBlockSize, spec.n - begin);
      generate_block(spec, b, ds.coords.data() + begin * spec.d, count);
    }
  };
  if (pool != nullptr)
    pool->parallel_for(blocks, 1, run);
  else
    run(0, blocks);
  return ds;
}

Distribution parse_distribution(const std::string& name) {
  if (name == "independent" || name == "indep") return Distribution::kIndependent;
  if (name == "correlated" || name == "corr") return Distribution::kCorrelated;
  if (name == "anticorrelated" || name == "anti") return Distribution::kAnticorrelated;
  throw ConfigError("unknown distribution: " + name);
}

std::string distribution_name(Distribution dist) {
  switch (dist) {
    case Distribution::kIndependent: return "independent";
    case Distribution::kCorrelated: return "correlated";
    case Distribution::kAnticorrelated: return "anticorrelated";
  }
  return "?";
}

Dataset ingest_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError(path + ": missing header row");

  int d = 1;
  for (char ch : line)
    if (ch == ',') ++d;
  if (d < 2) throw InputError(path + ": expected at least 2 columns");

  Dataset ds;
  ds.d = d;
  uint64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    int k = 0;
    while (std::getline(row, cell, ',')) {
      if (k >= d)
        throw InputError(path + ": line " + std::to_string(line_no) + ": too many columns");
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
        if (!std::isfinite(v)) throw std::invalid_argument(cell);
        ds.coords.push_back(v);
      } catch (const std::exception&) {
        throw InputError(path + ": line " + std::to_string(line_no) + ": not a number: '" + cell + "'");
      }
      ++k;
    }
    if (k != d)
      throw InputError(path + ": line " + std::to_string(line_no) + ": expected " + std::to_string(d) +
                       " columns, got " + std::to_string(k));
    ++ds.n;
  }
  if (ds.n == 0) throw InputError(path + ": no data rows");
  ds.compute_minmax();
  return ds;
}

void write_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (int k = 0; k < ds.d; ++k) out << (k ? ",x" : "x") << k;
  out << "\n";
  out.precision(17);
  for (uint32_t i = 0; i < ds.n; ++i) {
    for (int k = 0; k < ds.d; ++k) out << (k ? "," : "") << ds.coord(i, k);
    out << "\n";
  }
  if (!out) throw IoError("failed writing " + path);
}

namespace {

constexpr char kMagic[4] = {'S', 'K', 'Y', 'C'};

template <typename T>
void put_le(std::ofstream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t b = 0; b < sizeof(T); ++b) buf[b] = static_cast<unsigned char>(v >> (8 * b));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get_le(std::ifstream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  T v = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) v |= static_cast<T>(buf[b]) << (8 * b);
  return v;
}

}  // namespace

void write_bin(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write(kMagic, 4);
  put_le<uint32_t>(out, 1);
  put_le<uint32_t>(out, static_cast<uint32_t>(ds.d));
  put_le<uint64_t>(out, ds.n);
  for (double v : ds.coords) {
    uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    put_le<uint64_t>(out, bits);
  }
  if (!out) throw IoError("failed writing " + path);
}

Dataset read_bin(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) throw InputError(path + ": bad magic, not a dataset file");
  const uint32_t version = get_le<uint32_t>(in);
  if (version != 1) throw InputError(path + ": unsupported version " + std::to_string(version));
  Dataset ds;
  ds.d = static_cast<int>(get_le<uint32_t>(in));
  const uint64_t n = get_le<uint64_t>(in);
  if (ds.d < 2 || ds.d > kMaxDims) throw InputError(path + ": bad dimensionality");
  ds.n = static_cast<uint32_t>(n);
  ds.coords.resize(n * ds.d);
  for (double& v : ds.coords) {
    const uint64_t bits = get_le<uint64_t>(in);
    std::memcpy(&v, &bits, sizeof(v));
  }
  if (!in) throw InputError(path + ": truncated file");
  ds.compute_minmax();
  return ds;
}

}  // namespace skycell
