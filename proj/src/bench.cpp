#include "mcc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "mcc/error.hpp"

namespace mcc {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double bbox_density(std::span<const GeoPoint> points) {
  if (points.size() < 2) return 0.0;
  auto [xmin, xmax] = std::minmax_element(
      points.begin(), points.end(),
      [](const GeoPoint& a, const GeoPoint& b) { return a.x < b.x; });
  auto [ymin, ymax] = std::minmax_element(
      points.begin(), points.end(),
      [](const GeoPoint& a, const GeoPoint& b) { return a.y < b.y; });
  const double area = (xmax->x - xmin->x) * (ymax->y - ymin->y);
  return area > 0.0 ? static_cast<double>(points.size()) / area : 0.0;
}

void run_cell(std::span<const GeoPoint> points, const BenchConfig& cfg,
              SpatialAlgo algo, double d, int k, BenchRow& row) {
  row.algo = std::string(to_string(algo));
  row.d = d;
  row.k = k;
  DetectionConfig dc;
  dc.spatial_algo = algo;
  dc.clique = cfg.clique;
  try {
    dc.params = Params::make(d, k);
  } catch (const Error& e) {
    row.status = "error:" + std::string(to_string(e.code()));
    return;
  }

  const Deadline deadline(std::chrono::duration<double>(cfg.timeout_s));
  RunOptions opts{cfg.threads, &deadline};
  DetectionStats stats;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto clusters = spatial_clusters(points, dc, opts, &stats);
    const auto stop = std::chrono::steady_clock::now();
    row.seconds = std::chrono::duration<double>(stop - start).count();
    row.comparisons = stats.comparisons;
    row.clusters = clusters.size();
    row.status = "ok";
  } catch (const Error& e) {
    const auto stop = std::chrono::steady_clock::now();
    if (e.code() == ErrorCode::timeout) {
      row.seconds = cfg.timeout_s;
      row.status = "timeout";
    } else {
      row.seconds = std::chrono::duration<double>(stop - start).count();
      row.status = "error:" + std::string(to_string(e.code()));
    }
  } catch (const std::bad_alloc&) {
    row.status = "error:out_of_memory";
  }
}

}  // namespace

std::vector<GeoPoint> sample_points(std::span<const GeoPoint> points,
                                    double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0) || ratio > 1.0)
    throw Error(ErrorCode::invalid_argument, "ratio must be in (0, 1]");
  if (points.empty()) return {};
  const auto want = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::llround(ratio * static_cast<double>(points.size()))));
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  PortableRng rng(seed);
  // Partial Fisher-Yates with the portable generator.
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j = i + rng.below(idx.size() - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(want);
  std::sort(idx.begin(), idx.end());
  std::vector<GeoPoint> out;
  out.reserve(want);
  for (std::size_t i : idx) out.push_back(points[i]);
  return out;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.algos.empty() || cfg.ds.empty() || cfg.ks.empty())
    throw Error(ErrorCode::invalid_argument, "empty benchmark grid");
  if (!(cfg.timeout_s > 0.0))
    throw Error(ErrorCode::invalid_argument, "timeout must be positive");

  std::vector<BenchRow> rows;
  auto sweep = [&](std::span<const GeoPoint> pts, const std::string& dataset,
                   double density) {
    for (SpatialAlgo algo : cfg.algos) {
      for (double d : cfg.ds) {
        for (int k : cfg.ks) {
          BenchRow row;
          row.dataset = dataset;
          row.n = pts.size();
          row.density = density;
          run_cell(pts, cfg, algo, d, k, row);
          rows.push_back(std::move(row));
        }
      }
    }
  };

  if (cfg.points) {
    if (cfg.ratios.empty())
      throw Error(ErrorCode::invalid_argument, "empty ratio list");
    for (double ratio : cfg.ratios) {
      const auto pts = sample_points(*cfg.points, ratio, cfg.seed);
      sweep(pts, cfg.dataset_name, bbox_density(pts));
    }
    return rows;
  }

  if (cfg.ns.empty() || cfg.densities.empty())
    throw Error(ErrorCode::invalid_argument, "empty benchmark grid");
  for (std::size_t n : cfg.ns) {
    for (double density : cfg.densities) {
      GenSpec spec;
      spec.n = n;
      spec.density = density;
      spec.distribution = cfg.distribution;
      spec.seed = cfg.seed;
      const auto pts = generate(spec);
      sweep(pts, std::string(to_string(cfg.distribution)), density);
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const auto& r : rows) {
    out << r.algo << ',' << r.dataset << ',' << r.n << ',' << fmt(r.density)
        << ',' << fmt(r.d) << ',' << r.k << ',' << fmt(r.seconds) << ','
        << r.comparisons << ',' << r.clusters << ',' << r.status << '\n';
  }
}

}  // namespace mcc
