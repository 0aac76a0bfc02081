#pragma once

// Decoupled detection pipeline: spatial clusters first, then the social
// constraint on each cluster's induced subgraph, then a global maximality
// filter.

#include <cstdint>
#include <string_view>
#include <vector>

#include "mcc/baseline.hpp"
#include "mcc/model.hpp"
#include "mcc/parallel.hpp"

namespace mcc {

enum class SpatialAlgo { exact, exact_rule1, exact_rule12, approx, clique };

std::string_view to_string(SpatialAlgo algo);    // CLI label, e.g. "exact-r12"
SpatialAlgo parse_spatial_algo(std::string_view text);
Provenance provenance_of(SpatialAlgo algo);

struct DetectionConfig {
  Params params;
  SpatialAlgo spatial_algo = SpatialAlgo::exact_rule12;
  bool precluster_by_core = false;
  CliqueOptions clique;
};

struct DetectionStats {
  std::size_t spatial_clusters = 0;
  std::uint64_t comparisons = 0;
  std::size_t local_communities = 0;
  std::size_t components = 1;
};

// Spatial stage only, on an arbitrary point set.
std::vector<SpatialCluster> spatial_clusters(std::span<const GeoPoint> points,
                                             const DetectionConfig& cfg,
                                             const RunOptions& opts = {},
                                             DetectionStats* stats = nullptr);

std::vector<Community> detect_mccs(const GeoSocialNetwork& g,
                                   const DetectionConfig& cfg,
                                   const RunOptions& opts = {},
                                   DetectionStats* stats = nullptr);

// Drops every community that duplicates or is a proper subset of another.
// Output sorted by member list.
std::vector<Community> find_global_mcc(std::vector<Community> local);

// Communities containing q, found on the subnetwork within d of q.
std::vector<Community> search_mccs(const GeoSocialNetwork& g, VertexId q,
                                   const DetectionConfig& cfg,
                                   const RunOptions& opts = {});

}  // namespace mcc
