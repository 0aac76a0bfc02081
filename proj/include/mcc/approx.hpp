#pragma once

// sqrt(2)-approximate spatial clustering with axis-aligned d x d squares.
//
// Points are processed by ascending x. For a point p, every square whose left
// edge passes p and which contains p lies inside the slab
// [p.x, p.x + d] x [p.y - d, p.y + d]; sliding the square's top edge down
// through the slab yields the p-local clusters. A local cluster is global
// unless a cluster registered earlier holds its min-y, max-y and max-x
// members, which forces containment of the whole bounding box.

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mcc/model.hpp"
#include "mcc/parallel.hpp"

namespace mcc {

class GascRegistry {
 public:
  // Labels of emitted clusters containing `id`, ascending.
  std::span<const int> labels_of(VertexId id) const;

  // Assigns the next label to `members` and returns it.
  int add(std::span<const VertexId> members);

  int next_label() const { return next_label_; }

 private:
  std::unordered_map<VertexId, std::vector<int>> node_gasc_;
  int next_label_ = 0;
};

// False iff the min-y, max-y and max-x members of `cs` share a registered
// cluster. Assumes every container candidate was registered already (true
// under left-to-right processing). Ties pick the first extreme in input order.
bool check_global(const GascRegistry& reg, std::span<const GeoPoint> cs);

// p-local approximate clusters over `slab` (which must include p): maximal
// sets S with p in S, y-spread of S <= d, and a covering square with left
// edge at p.x and top edge in [p.y, p.y + d]. Sorted by member list.
std::vector<SpatialCluster> local_approx_clusters(
    const GeoPoint& p, std::span<const GeoPoint> slab, double d,
    double eps = kDefaultEps);

struct GascStats {
  std::uint64_t local_clusters = 0;
  std::uint64_t global_checks = 0;
  std::uint64_t fallback_comparisons = 0;
};

// Streams every global approximate cluster of size >= k to `sink` in
// processing order.
GascStats find_gasc_stream(
    std::span<const GeoPoint> points, double d, int k,
    const std::function<void(const SpatialCluster&)>& sink,
    double eps = kDefaultEps, const RunOptions& opts = {});

std::vector<SpatialCluster> find_gasc(std::span<const GeoPoint> points,
                                      double d, int k,
                                      double eps = kDefaultEps,
                                      const RunOptions& opts = {},
                                      GascStats* stats = nullptr);

}  // namespace mcc
