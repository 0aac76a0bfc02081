#include "mcc/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcc/error.hpp"

namespace mcc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_vertex: return "UnknownVertex";
    case ErrorCode::duplicate_id: return "DuplicateId";
    case ErrorCode::non_positive_cell_size: return "NonPositiveCellSize";
    case ErrorCode::empty_range: return "EmptyRange";
    case ErrorCode::too_far: return "TooFar";
    case ErrorCode::empty_cluster: return "EmptyCluster";
    case ErrorCode::missing_center_rect: return "MissingCenterRect";
    case ErrorCode::invalid_spec: return "InvalidSpec";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::clique_budget_exceeded: return "CliqueBudgetExceeded";
    case ErrorCode::timeout: return "Timeout";
  }
  return "Unknown";
}

std::string_view to_string(SocialKind kind) {
  return kind == SocialKind::core ? "core" : "truss";
}

SocialKind parse_social_kind(std::string_view text) {
  if (text == "core") return SocialKind::core;
  if (text == "truss") return SocialKind::truss;
  throw Error(ErrorCode::invalid_argument,
              "unknown social constraint '" + std::string(text) + "'");
}

std::string_view to_string(ClusterKind kind) {
  switch (kind) {
    case ClusterKind::exact_circle: return "exact_circle";
    case ClusterKind::approx_square: return "approx_square";
    case ClusterKind::all_pair: return "all_pair";
  }
  return "unknown";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::approx_sqrt2: return "approximate (sqrt2)";
    case Provenance::all_pair: return "all-pair semantics";
  }
  return "unknown";
}

Params Params::make(double d, int k, SocialKind kind, double eps) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw Error(ErrorCode::invalid_argument, "d must be positive and finite");
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  if (kind == SocialKind::truss && k < 2)
    throw Error(ErrorCode::invalid_argument, "truss k must be >= 2");
  if (!(eps >= 0.0))
    throw Error(ErrorCode::invalid_argument, "eps must be non-negative");
  return Params{d, d / 2.0, k, kind, eps};
}

std::size_t SocialGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

bool SocialGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::uint32_t> GeoSocialNetwork::index_of(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const GeoPoint& GeoSocialNetwork::point(VertexId id) const {
  auto idx = index_of(id);
  if (!idx)
    throw Error(ErrorCode::unknown_vertex,
                "unknown vertex " + std::to_string(id));
  return points_[*idx];
}

std::vector<std::pair<VertexId, VertexId>> GeoSocialNetwork::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::uint32_t u = 0; u < graph_.adj.size(); ++u) {
    for (std::uint32_t v : graph_.adj[u]) {
      VertexId a = graph_.ids[u];
      VertexId b = graph_.ids[v];
      if (a < b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeoSocialNetwork build_network(
    std::vector<GeoPoint> points,
    std::span<const std::pair<VertexId, VertexId>> edges) {
  GeoSocialNetwork net;
  net.index_.reserve(points.size());
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(ErrorCode::invalid_argument,
                  "non-finite coordinate for vertex " + std::to_string(p.id));
    if (!net.index_.emplace(p.id, i).second)
      throw Error(ErrorCode::duplicate_id,
                  "duplicate vertex id " + std::to_string(p.id));
  }

  net.graph_.ids.reserve(points.size());
  for (const auto& p : points) net.graph_.ids.push_back(p.id);
  net.graph_.adj.assign(points.size(), {});

  for (const auto& [a, b] : edges) {
    auto ia = net.index_.find(a);
    auto ib = net.index_.find(b);
    if (ia == net.index_.end() || ib == net.index_.end())
      throw Error(ErrorCode::unknown_vertex,
                  "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") references an unknown vertex");
    if (a == b) continue;
    net.graph_.adj[ia->second].push_back(ib->second);
    net.graph_.adj[ib->second].push_back(ia->second);
  }
  for (auto& nb : net.graph_.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  net.points_ = std::move(points);
  return net;
}

void canonicalize(std::vector<VertexId>& members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

SpatialCluster SpatialCluster::make(std::vector<VertexId> members,
                                    VertexId reference, ClusterKind kind) {
  members.push_back(reference);
  canonicalize(members);
  SpatialCluster c;
  c.members = std::move(members);
  c.reference = reference;
  c.kind = kind;
  return c;
}

bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.size() > b.size()) return false;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<VertexId>> member_sets(
    std::span<const SpatialCluster> clusters) {
  std::vector<std::vector<VertexId>> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) out.push_back(c.members);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> member_sets(
    std::span<const Community> communities) {
  std::vector<std::vector<VertexId>> out;
  out.reserve(communities.size());
  for (const auto& c : communities) out.push_back(c.members);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> maximal_sets(
    std::vector<std::vector<VertexId>> sets) {
  for (auto& s : sets) canonicalize(s);
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  // Inverted index from element to accepted sets holding it. Any superset of
  // s must hold s's first element, so only that posting list is scanned.
  std::unordered_map<VertexId, std::vector<std::size_t>> holders;
  std::vector<std::vector<VertexId>> kept;
  for (auto& s : sets) {
    bool contained = false;
    if (!s.empty()) {
      auto it = holders.find(s.front());
      if (it != holders.end()) {
        for (std::size_t idx : it->second) {
          if (kept[idx].size() > s.size() && is_subset(s, kept[idx])) {
            contained = true;
            break;
          }
        }
      }
    } else {
      contained = !kept.empty();
    }
    if (contained) continue;
    for (VertexId v : s) holders[v].push_back(kept.size());
    kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace mcc
