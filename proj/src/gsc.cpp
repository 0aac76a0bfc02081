#include "mcc/gsc.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "mcc/error.hpp"
#include "mcc/spatial_index.hpp"
#include "mcc/sweep_exact.hpp"

namespace mcc {
namespace {

std::unordered_map<VertexId, std::uint32_t> index_by_id(
    std::span<const GeoPoint> points) {
  std::unordered_map<VertexId, std::uint32_t> idx;
  idx.reserve(points.size());
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    if (!idx.emplace(points[i].id, i).second)
      throw Error(ErrorCode::duplicate_id,
                  "duplicate vertex id " + std::to_string(points[i].id));
  }
  return idx;
}

struct CellKey {
  std::int64_t cx;
  std::int64_t cy;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& c) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(c.cx) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(c.cy) + 0x7F4A7C159E3779B9ULL + (h << 6) +
         (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

CenterRect center_rect(std::span<const GeoPoint> members, double r) {
  if (members.empty())
    throw Error(ErrorCode::empty_cluster, "center_rect of an empty cluster");
  double x_min = members[0].x, x_max = members[0].x;
  double y_min = members[0].y, y_max = members[0].y;
  for (const auto& p : members) {
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }
  return CenterRect{x_max - r, x_min + r, y_max - r, y_min + r};
}

bool rects_intersect(const CenterRect& a, const CenterRect& b, double eps) {
  return a.x_lo <= b.x_hi + eps && b.x_lo <= a.x_hi + eps &&
         a.y_lo <= b.y_hi + eps && b.y_lo <= a.y_hi + eps;
}

std::string_view to_string(PruneLevel level) {
  switch (level) {
    case PruneLevel::none: return "none";
    case PruneLevel::rule1: return "rule1";
    case PruneLevel::rule1_2: return "rule1_2";
  }
  return "unknown";
}

GscResult find_gsc(std::span<const GeoPoint> points,
                   std::vector<SpatialCluster> lscs, int k, PruneLevel level,
                   double d, double eps, const RunOptions& opts) {
  GscResult result;
  result.local_cluster_count = lscs.size();

  std::erase_if(lscs, [k](const SpatialCluster& c) {
    return c.size() < static_cast<std::size_t>(std::max(k, 0));
  });
  if (level == PruneLevel::rule1_2) {
    for (const auto& c : lscs) {
      if (!c.center_rect)
        throw Error(ErrorCode::missing_center_rect,
                    "pruning rule II needs a center rect on every cluster");
    }
  }

  // Largest first, so any container of a cluster is decided before it. The
  // same member set reached from several reference points is one cluster.
  {
    std::vector<std::uint32_t> order(lscs.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t x, std::uint32_t y) {
                const SpatialCluster& a = lscs[x];
                const SpatialCluster& b = lscs[y];
                if (a.size() != b.size()) return a.size() > b.size();
                if (a.members != b.members) return a.members < b.members;
                return a.reference < b.reference;
              });
    std::vector<SpatialCluster> sorted;
    sorted.reserve(order.size());
    for (std::uint32_t i : order) {
      if (!sorted.empty() && sorted.back().members == lscs[i].members) continue;
      sorted.push_back(std::move(lscs[i]));
    }
    lscs = std::move(sorted);
  }

  std::unordered_map<VertexId, std::uint32_t> by_id;
  if (level != PruneLevel::none) by_id = index_by_id(points);
  auto reference_point = [&](const SpatialCluster& c) -> const GeoPoint& {
    auto it = by_id.find(c.reference);
    if (it == by_id.end())
      throw Error(ErrorCode::unknown_vertex,
                  "reference vertex " + std::to_string(c.reference) +
                      " is not in the point set");
    return points[it->second];
  };

  std::vector<GeoPoint> refs;
  if (level != PruneLevel::none) {
    refs.reserve(lscs.size());
    for (const auto& c : lscs) refs.push_back(reference_point(c));
  }

  const double reach = d + eps;
  auto cell_of = [d](double x, double y) {
    return CellKey{static_cast<std::int64_t>(std::floor(x / d)),
                   static_cast<std::int64_t>(std::floor(y / d))};
  };

  // Accepted clusters bucketed by the grid cell of their reference point.
  struct Entry {
    double x;
    double y;
    std::size_t size;
    std::uint32_t pos;  // into lscs
    CenterRect rect;
  };
  std::vector<std::uint32_t> accepted;  // positions into lscs
  std::unordered_map<CellKey, std::vector<Entry>, CellKeyHash> cells;
  std::vector<std::uint32_t> candidates;
  std::uint64_t comparisons = 0;
  const bool use_rects = level == PruneLevel::rule1_2;

  for (std::uint32_t i = 0; i < lscs.size(); ++i) {
    if ((i & 0xFFF) == 0) opts.check_deadline();
    const SpatialCluster& s = lscs[i];
    bool contained = false;

    if (level == PruneLevel::none) {
      for (std::uint32_t a : accepted) {
        if (lscs[a].size() <= s.size()) break;
        ++comparisons;
        if (is_subset(s.members, lscs[a].members)) {
          contained = true;
          break;
        }
      }
    } else {
      // Rule I: a container's reference lies within d of this reference.
      const GeoPoint& ref = refs[i];
      const CellKey lo = cell_of(ref.x - reach, ref.y - reach);
      const CellKey hi = cell_of(ref.x + reach, ref.y + reach);
      const CenterRect* rect = use_rects ? &*s.center_rect : nullptr;
      candidates.clear();
      for (std::int64_t cx = lo.cx; cx <= hi.cx; ++cx) {
        for (std::int64_t cy = lo.cy; cy <= hi.cy; ++cy) {
          auto it = cells.find(CellKey{cx, cy});
          if (it == cells.end()) continue;
          for (const Entry& e : it->second) {
            if (e.size <= s.size()) break;
            // Rule II: a container's center rect overlaps ours.
            if (rect != nullptr && !rects_intersect(*rect, e.rect, eps))
              continue;
            if (planar_norm(e.x - ref.x, e.y - ref.y) > reach) continue;
            candidates.push_back(e.pos);
          }
        }
      }
      std::sort(candidates.begin(), candidates.end());
      for (std::uint32_t a : candidates) {
        ++comparisons;
        if (is_subset(s.members, lscs[a].members)) {
          contained = true;
          break;
        }
      }
    }

    if (contained) continue;
    accepted.push_back(i);
    if (level != PruneLevel::none) {
      const GeoPoint& ref = refs[i];
      cells[cell_of(ref.x, ref.y)].push_back(
          Entry{ref.x, ref.y, s.size(), i,
                s.center_rect ? *s.center_rect : CenterRect{}});
    }
  }

  result.stats.comparisons = comparisons;
  result.clusters.reserve(accepted.size());
  for (std::uint32_t a : accepted) result.clusters.push_back(std::move(lscs[a]));
  std::sort(result.clusters.begin(), result.clusters.end(),
            [](const SpatialCluster& a, const SpatialCluster& b) {
              return a.members < b.members;
            });
  return result;
}

std::vector<SpatialCluster> all_local_spatial_clusters(
    std::span<const GeoPoint> points, double d, int k, double eps,
    const RunOptions& opts) {
  if (!(d > 0.0))
    throw Error(ErrorCode::invalid_argument, "d must be positive");
  const double r = d / 2.0;
  const auto by_id = index_by_id(points);
  const GridIndex grid(points, d, eps);

  std::vector<std::vector<SpatialCluster>> per_point(points.size());
  parallel_for(points.size(), opts.threads, [&](std::size_t i) {
    if ((i & 0x3FF) == 0) opts.check_deadline();
    const GeoPoint& v = points[i];
    const auto near = grid.disk_positions(v.x, v.y, d);
    if (near.size() < static_cast<std::size_t>(std::max(k, 0))) return;

    std::vector<GeoPoint> candidates;
    candidates.reserve(near.size());
    for (auto pos : near) {
      if (pos != i) candidates.push_back(points[pos]);
    }
    auto local = local_spatial_clusters(v, candidates, r, eps);

    std::vector<GeoPoint> coords;
    for (auto& c : local) {
      coords.clear();
      for (VertexId id : c.members) coords.push_back(points[by_id.at(id)]);
      c.center_rect = center_rect(coords, r);
    }
    per_point[i] = std::move(local);
  });

  std::vector<SpatialCluster> all;
  for (auto& local : per_point) {
    for (auto& c : local) all.push_back(std::move(c));
  }
  return all;
}

GscResult global_spatial_clusters(std::span<const GeoPoint> points, double d,
                                  int k, PruneLevel level, double eps,
                                  const RunOptions& opts) {
  auto lscs = all_local_spatial_clusters(points, d, k, eps, opts);
  return find_gsc(points, std::move(lscs), k, level, d, eps, opts);
}

}  // namespace mcc
