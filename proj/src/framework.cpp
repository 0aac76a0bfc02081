#include "mcc/framework.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mcc/approx.hpp"
#include "mcc/error.hpp"
#include "mcc/gsc.hpp"
#include "mcc/social.hpp"

namespace mcc {

std::string_view to_string(SpatialAlgo algo) {
  switch (algo) {
    case SpatialAlgo::exact: return "exact";
    case SpatialAlgo::exact_rule1: return "exact-r1";
    case SpatialAlgo::exact_rule12: return "exact-r12";
    case SpatialAlgo::approx: return "approx";
    case SpatialAlgo::clique: return "clique";
  }
  return "unknown";
}

SpatialAlgo parse_spatial_algo(std::string_view text) {
  for (auto algo : {SpatialAlgo::exact, SpatialAlgo::exact_rule1,
                    SpatialAlgo::exact_rule12, SpatialAlgo::approx,
                    SpatialAlgo::clique}) {
    if (text == to_string(algo)) return algo;
  }
  throw Error(ErrorCode::invalid_argument,
              "unknown spatial algorithm '" + std::string(text) + "'");
}

Provenance provenance_of(SpatialAlgo algo) {
  switch (algo) {
    case SpatialAlgo::approx: return Provenance::approx_sqrt2;
    case SpatialAlgo::clique: return Provenance::all_pair;
    default: return Provenance::exact;
  }
}

std::vector<SpatialCluster> spatial_clusters(std::span<const GeoPoint> points,
                                             const DetectionConfig& cfg,
                                             const RunOptions& opts,
                                             DetectionStats* stats) {
  const Params& p = cfg.params;
  std::vector<SpatialCluster> out;
  std::uint64_t comparisons = 0;
  switch (cfg.spatial_algo) {
    case SpatialAlgo::exact:
    case SpatialAlgo::exact_rule1:
    case SpatialAlgo::exact_rule12: {
      const PruneLevel level =
          cfg.spatial_algo == SpatialAlgo::exact         ? PruneLevel::none
          : cfg.spatial_algo == SpatialAlgo::exact_rule1 ? PruneLevel::rule1
                                                         : PruneLevel::rule1_2;
      auto res = global_spatial_clusters(points, p.d, p.k, level, p.eps, opts);
      comparisons = res.stats.comparisons;
      out = std::move(res.clusters);
      break;
    }
    case SpatialAlgo::approx: {
      GascStats gs;
      out = find_gasc(points, p.d, p.k, p.eps, opts, &gs);
      comparisons = gs.global_checks + gs.fallback_comparisons;
      break;
    }
    case SpatialAlgo::clique: {
      out = clique_clusters(points, p.d, p.eps, cfg.clique, opts);
      std::erase_if(out, [&](const SpatialCluster& c) {
        return c.size() < static_cast<std::size_t>(p.k);
      });
      break;
    }
  }
  if (stats != nullptr) {
    stats->spatial_clusters += out.size();
    stats->comparisons += comparisons;
  }
  return out;
}

std::vector<Community> find_global_mcc(std::vector<Community> local) {
  // Hash-free dedup: sorting puts equal member lists next to each other.
  std::sort(local.begin(), local.end(),
            [](const Community& a, const Community& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a.members < b.members;
            });
  local.erase(std::unique(local.begin(), local.end(),
                          [](const Community& a, const Community& b) {
                            return a.members == b.members;
                          }),
              local.end());

  std::unordered_map<VertexId, std::vector<std::size_t>> holders;
  std::vector<Community> kept;
  for (auto& c : local) {
    bool contained = false;
    if (!c.members.empty()) {
      auto it = holders.find(c.members.front());
      if (it != holders.end()) {
        for (std::size_t idx : it->second) {
          if (kept[idx].size() > c.size() &&
              is_subset(c.members, kept[idx].members)) {
            contained = true;
            break;
          }
        }
      }
    }
    if (contained) continue;
    for (VertexId v : c.members) holders[v].push_back(kept.size());
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Community& a, const Community& b) {
              return a.members < b.members;
            });
  return kept;
}

std::vector<Community> detect_mccs(const GeoSocialNetwork& g,
                                   const DetectionConfig& cfg,
                                   const RunOptions& opts,
                                   DetectionStats* stats) {
  const Params& p = cfg.params;
  const SocialGraph& graph = g.graph();

  // Each MCC lies inside one component of the global k-core (k-truss), so the
  // pipeline can run per component.
  std::vector<std::vector<VertexId>> parts;
  if (cfg.precluster_by_core) {
    for (auto& c : communities(graph, p.k, p.social_kind))
      parts.push_back(std::move(c.members));
  } else {
    parts.emplace_back(graph.ids.begin(), graph.ids.end());
  }

  DetectionStats local_stats;
  local_stats.components = parts.size();
  std::vector<Community> found;

  for (const auto& part : parts) {
    std::vector<GeoPoint> pts;
    pts.reserve(part.size());
    for (VertexId id : part) pts.push_back(g.point(id));
    const auto clusters = spatial_clusters(pts, cfg, opts, &local_stats);

    std::vector<std::vector<Community>> per_cluster(clusters.size());
    parallel_for(clusters.size(), opts.threads, [&](std::size_t i) {
      if ((i & 0xFF) == 0) opts.check_deadline();
      std::vector<std::uint32_t> local;
      local.reserve(clusters[i].size());
      for (VertexId id : clusters[i].members) local.push_back(*g.index_of(id));
      std::sort(local.begin(), local.end());
      const auto sub = induced_subgraph(graph, local);
      per_cluster[i] = communities(sub, p.k, p.social_kind);
    });
    for (auto& list : per_cluster) {
      for (auto& c : list) found.push_back(std::move(c));
    }
  }

  local_stats.local_communities = found.size();
  auto out = find_global_mcc(std::move(found));
  for (auto& c : out) c.provenance = provenance_of(cfg.spatial_algo);
  if (stats != nullptr) *stats = local_stats;
  return out;
}

std::vector<Community> search_mccs(const GeoSocialNetwork& g, VertexId q,
                                   const DetectionConfig& cfg,
                                   const RunOptions& opts) {
  const GeoPoint& center = g.point(q);
  const double reach = cfg.params.d + cfg.params.eps;

  std::vector<GeoPoint> near;
  for (const auto& p : g.points()) {
    if (euclidean_distance(p, center) <= reach) near.push_back(p);
  }
  std::vector<VertexId> ids;
  ids.reserve(near.size());
  for (const auto& p : near) ids.push_back(p.id);
  std::sort(ids.begin(), ids.end());

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [a, b] : g.edges()) {
    if (std::binary_search(ids.begin(), ids.end(), a) &&
        std::binary_search(ids.begin(), ids.end(), b))
      edges.emplace_back(a, b);
  }
  const GeoSocialNetwork sub = build_network(std::move(near), edges);

  auto all = detect_mccs(sub, cfg, opts);
  std::erase_if(all, [q](const Community& c) {
    return !std::binary_search(c.members.begin(), c.members.end(), q);
  });
  return find_global_mcc(std::move(all));
}

}  // namespace mcc
