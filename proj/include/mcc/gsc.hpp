#pragma once

// Global spatial clusters: maximal point sets enclosable by a circle of
// diameter d, assembled from per-point local clusters.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mcc/model.hpp"
#include "mcc/parallel.hpp"

namespace mcc {

// x in [x_max - r, x_min + r], y in [y_max - r, y_min + r].
CenterRect center_rect(std::span<const GeoPoint> members, double r);

bool rects_intersect(const CenterRect& a, const CenterRect& b,
                     double eps = kDefaultEps);

enum class PruneLevel { none, rule1, rule1_2 };

std::string_view to_string(PruneLevel level);

struct ComparisonStats {
  // Element-wise subset tests actually performed.
  std::uint64_t comparisons = 0;
};

struct GscResult {
  std::vector<SpatialCluster> clusters;  // sorted by member list
  ComparisonStats stats;
  std::size_t local_cluster_count = 0;
};

// Keeps the clusters of size >= k that are neither a duplicate nor a proper
// subset of another input cluster. `points` must contain every reference
// point (used by rule I). rule1_2 requires center_rect on every input.
// Output does not depend on the prune level; only stats do.
GscResult find_gsc(std::span<const GeoPoint> points,
                   std::vector<SpatialCluster> lscs, int k, PruneLevel level,
                   double d, double eps = kDefaultEps,
                   const RunOptions& opts = {});

// Full exact pipeline: per-point disk query, size-k prefilter, angular sweep,
// then find_gsc.
GscResult global_spatial_clusters(std::span<const GeoPoint> points, double d,
                                  int k, PruneLevel level,
                                  double eps = kDefaultEps,
                                  const RunOptions& opts = {});

// All local clusters for every reference point (before global filtering),
// with center rects attached.
std::vector<SpatialCluster> all_local_spatial_clusters(
    std::span<const GeoPoint> points, double d, int k,
    double eps = kDefaultEps, const RunOptions& opts = {});

}  // namespace mcc
