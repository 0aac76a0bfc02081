#pragma once

// Core value types shared by the spatial, social and framework layers.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mcc {

using VertexId = std::int64_t;

inline constexpr double kDefaultEps = 1e-9;

struct GeoPoint {
  VertexId id = 0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

// sqrt(dx^2 + dy^2). Used by every distance predicate so that the fast paths
// and the oracles agree bit for bit.
inline double planar_norm(double dx, double dy) {
  return std::sqrt(dx * dx + dy * dy);
}

inline double euclidean_distance(const GeoPoint& a, const GeoPoint& b) {
  return planar_norm(a.x - b.x, a.y - b.y);
}

enum class SocialKind { core, truss };

std::string_view to_string(SocialKind kind);
SocialKind parse_social_kind(std::string_view text);

// Run parameters. r is always d / 2.
struct Params {
  double d = 1.0;
  double r = 0.5;
  int k = 1;
  SocialKind social_kind = SocialKind::core;
  double eps = kDefaultEps;

  // Validates d > 0, k >= 1 (>= 2 for truss), eps >= 0 and derives r.
  static Params make(double d, int k, SocialKind kind = SocialKind::core,
                     double eps = kDefaultEps);
};

// Undirected simple graph over local indices 0..n-1; ids[i] is the vertex id
// of local index i in whatever network the graph was taken from. Each
// adjacency list is sorted ascending. Used both for the whole social graph
// and for induced subgraphs.
struct SocialGraph {
  std::vector<VertexId> ids;
  std::vector<std::vector<std::uint32_t>> adj;

  std::size_t size() const { return ids.size(); }
  std::size_t edge_count() const;
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
};

using InducedSubgraph = SocialGraph;

// Validated geo-social network: points plus symmetric adjacency without
// self-loops or parallel edges. Immutable after construction.
class GeoSocialNetwork {
 public:
  GeoSocialNetwork() = default;

  std::span<const GeoPoint> points() const { return points_; }
  const SocialGraph& graph() const { return graph_; }
  std::size_t size() const { return points_.size(); }

  std::optional<std::uint32_t> index_of(VertexId id) const;
  const GeoPoint& point(VertexId id) const;  // throws unknown_vertex

  // Each undirected edge once, as (smaller id, larger id), sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const GeoSocialNetwork& a,
                         const GeoSocialNetwork& b) {
    return a.points_ == b.points_ && a.graph_.adj == b.graph_.adj;
  }

 private:
  friend GeoSocialNetwork build_network(
      std::vector<GeoPoint> points,
      std::span<const std::pair<VertexId, VertexId>> edges);

  std::vector<GeoPoint> points_;
  SocialGraph graph_;
  std::unordered_map<VertexId, std::uint32_t> index_;
};

// Drops self-loops and duplicate edges and symmetrizes. Throws
// duplicate_id / unknown_vertex.
GeoSocialNetwork build_network(
    std::vector<GeoPoint> points,
    std::span<const std::pair<VertexId, VertexId>> edges);

// Feasible region for the centers of radius-r circles covering a point set.
struct CenterRect {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;

  friend bool operator==(const CenterRect&, const CenterRect&) = default;
};

enum class ClusterKind { exact_circle, approx_square, all_pair };

std::string_view to_string(ClusterKind kind);

struct SpatialCluster {
  std::vector<VertexId> members;  // sorted ascending, unique
  VertexId reference = 0;
  ClusterKind kind = ClusterKind::exact_circle;
  std::optional<CenterRect> center_rect;

  // Canonicalizes members; reference is inserted if missing.
  static SpatialCluster make(std::vector<VertexId> members, VertexId reference,
                             ClusterKind kind);

  std::size_t size() const { return members.size(); }

  friend bool operator==(const SpatialCluster& a, const SpatialCluster& b) {
    return a.members == b.members && a.reference == b.reference &&
           a.kind == b.kind;
  }
};

enum class Provenance { exact, approx_sqrt2, all_pair };

std::string_view to_string(Provenance p);

struct Community {
  std::vector<VertexId> members;  // sorted ascending
  int k = 1;
  SocialKind social_kind = SocialKind::core;
  Provenance provenance = Provenance::exact;

  std::size_t size() const { return members.size(); }

  friend bool operator==(const Community&, const Community&) = default;
};

// Sorts and removes duplicates in place.
void canonicalize(std::vector<VertexId>& members);

// a ⊆ b for sorted sequences.
bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b);

// Member sets of a cluster family, sorted lexicographically. Handy for
// set-of-sets comparisons.
std::vector<std::vector<VertexId>> member_sets(
    std::span<const SpatialCluster> clusters);
std::vector<std::vector<VertexId>> member_sets(
    std::span<const Community> communities);

// Keeps the sets that are not a subset of another set; duplicates collapse to
// one. Result sorted lexicographically.
std::vector<std::vector<VertexId>> maximal_sets(
    std::vector<std::vector<VertexId>> sets);

}  // namespace mcc
