#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcc/datagen.hpp"
#include "mcc/framework.hpp"

namespace mcc {

struct BenchConfig {
  std::vector<SpatialAlgo> algos{SpatialAlgo::exact_rule12};
  std::vector<std::size_t> ns{1000};
  std::vector<double> densities{0.008};
  std::vector<double> ds{30.0};
  std::vector<int> ks{1};
  Distribution distribution = Distribution::uniform;
  std::uint64_t seed = 1;
  double timeout_s = 8000.0;
  unsigned threads = 1;
  CliqueOptions clique;

  // Real-data mode: sample users from these points instead of generating.
  // `ratios` replaces `ns` and `densities`.
  std::optional<std::vector<GeoPoint>> points;
  std::string dataset_name;
  std::vector<double> ratios{1.0};
};

struct BenchRow {
  std::string algo;
  std::string dataset;
  std::size_t n = 0;
  double density = 0.0;
  double d = 0.0;
  int k = 1;
  double seconds = 0.0;
  std::uint64_t comparisons = 0;
  std::size_t clusters = 0;
  std::string status;  // ok | timeout | error:<ErrorName>
};

inline constexpr const char* kBenchHeader =
    "algo,dataset,n,density,d,k,seconds,comparisons,clusters,status";

// Runs the full cartesian grid. Per-cell failures become status values; the
// sweep itself only throws on an invalid config.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Uniform sample of round(ratio * n) points (at least one) in input order.
std::vector<GeoPoint> sample_points(std::span<const GeoPoint> points,
                                    double ratio, std::uint64_t seed);

}  // namespace mcc
