#include "mcc/approx.hpp"

#include <algorithm>
#include <numeric>

#include "mcc/error.hpp"
#include "mcc/spatial_index.hpp"

namespace mcc {
namespace {

// Maximal top-edge windows over `slab`, as lists of slab positions.
std::vector<std::vector<std::uint32_t>> anchored_windows(
    const GeoPoint& p, std::span<const GeoPoint> slab, double d, double eps) {
  std::vector<std::uint32_t> order(slab.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (slab[a].y != slab[b].y) return slab[a].y > slab[b].y;
    return slab[a].id < slab[b].id;
  });

  // Window for top edge t covers y in [t - d, t]. In descending-y order it is
  // the index range [lo, hi); both ends only move forward as t decreases.
  struct Range {
    std::size_t lo;
    std::size_t hi;
  };
  std::vector<Range> ranges;
  std::size_t lo = 0, hi = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const double t = slab[order[j]].y;
    if (t > p.y + d + eps) continue;
    if (t < p.y - eps) break;
    while (lo < order.size() && slab[order[lo]].y > t + eps) ++lo;
    hi = std::max(hi, lo);
    while (hi < order.size() && slab[order[hi]].y >= t - d - eps) ++hi;
    if (ranges.empty() || ranges.back().lo != lo || ranges.back().hi != hi)
      ranges.push_back({lo, hi});
  }

  // With monotone ends, a range is contained in another one iff it is
  // contained in a neighbour.
  auto inside = [](const Range& a, const Range& b) {
    return b.lo <= a.lo && a.hi <= b.hi;
  };
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (i > 0 && inside(ranges[i], ranges[i - 1])) continue;
    if (i + 1 < ranges.size() && inside(ranges[i], ranges[i + 1])) continue;
    out.emplace_back(order.begin() + ranges[i].lo,
                     order.begin() + ranges[i].hi);
  }
  return out;
}

}  // namespace

std::span<const int> GascRegistry::labels_of(VertexId id) const {
  auto it = node_gasc_.find(id);
  if (it == node_gasc_.end()) return {};
  return it->second;
}

int GascRegistry::add(std::span<const VertexId> members) {
  const int label = next_label_++;
  for (VertexId id : members) node_gasc_[id].push_back(label);
  return label;
}

bool check_global(const GascRegistry& reg, std::span<const GeoPoint> cs) {
  if (cs.empty()) return true;
  std::size_t lo_y = 0, hi_y = 0, hi_x = 0;
  for (std::size_t i = 1; i < cs.size(); ++i) {
    if (cs[i].y < cs[lo_y].y) lo_y = i;
    if (cs[i].y > cs[hi_y].y) hi_y = i;
    if (cs[i].x > cs[hi_x].x) hi_x = i;
  }
  const auto a = reg.labels_of(cs[lo_y].id);
  const auto b = reg.labels_of(cs[hi_y].id);
  if (a.empty() || b.empty()) return true;
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  if (common.empty()) return true;
  const auto c = reg.labels_of(cs[hi_x].id);
  std::vector<int> all3;
  std::set_intersection(common.begin(), common.end(), c.begin(), c.end(),
                        std::back_inserter(all3));
  return all3.empty();
}

std::vector<SpatialCluster> local_approx_clusters(
    const GeoPoint& p, std::span<const GeoPoint> slab, double d, double eps) {
  std::vector<SpatialCluster> out;
  for (const auto& window : anchored_windows(p, slab, d, eps)) {
    std::vector<VertexId> ids;
    ids.reserve(window.size());
    for (auto pos : window) ids.push_back(slab[pos].id);
    out.push_back(SpatialCluster::make(std::move(ids), p.id,
                                       ClusterKind::approx_square));
  }
  if (out.empty())
    out.push_back(SpatialCluster::make({}, p.id, ClusterKind::approx_square));
  std::sort(out.begin(), out.end(),
            [](const SpatialCluster& a, const SpatialCluster& b) {
              return a.members < b.members;
            });
  return out;
}

GascStats find_gasc_stream(
    std::span<const GeoPoint> points, double d, int k,
    const std::function<void(const SpatialCluster&)>& sink, double eps,
    const RunOptions& opts) {
  if (!(d > 0.0))
    throw Error(ErrorCode::invalid_argument, "d must be positive");
  GascStats stats;
  const GridIndex grid(points, d, eps);

  std::vector<std::uint32_t> order(points.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    if (points[a].y != points[b].y) return points[a].y < points[b].y;
    return points[a].id < points[b].id;
  });

  GascRegistry registry;
  // Clusters emitted by references sharing the current x; the extreme-point
  // test does not order those, so they are compared member-wise.
  std::vector<std::vector<VertexId>> tie_group;
  double tie_x = 0.0;

  const std::size_t min_size = static_cast<std::size_t>(std::max(k, 0));
  std::vector<GeoPoint> slab;

  for (std::size_t step = 0; step < order.size(); ++step) {
    if ((step & 0x3FF) == 0) opts.check_deadline();
    const GeoPoint& p = points[order[step]];
    if (step == 0 || p.x > tie_x + eps) {
      tie_group.clear();
      tie_x = p.x;
    }

    slab.clear();
    for (auto pos : grid.rect_positions(p.x, p.x + d, p.y - d - eps,
                                        p.y + d + eps))
      slab.push_back(points[pos]);

    auto windows = anchored_windows(p, slab, d, eps);
    std::vector<std::vector<GeoPoint>> locals;
    locals.reserve(windows.size());
    for (const auto& w : windows) {
      std::vector<GeoPoint> pts;
      pts.reserve(w.size());
      for (auto pos : w) pts.push_back(slab[pos]);
      std::sort(pts.begin(), pts.end(),
                [](const GeoPoint& a, const GeoPoint& b) { return a.id < b.id; });
      locals.push_back(std::move(pts));
    }
    std::sort(locals.begin(), locals.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(
          a.begin(), a.end(), b.begin(), b.end(),
          [](const GeoPoint& u, const GeoPoint& v) { return u.id < v.id; });
    });
    stats.local_clusters += locals.size();

    for (const auto& cs : locals) {
      if (cs.size() < min_size) continue;
      std::vector<VertexId> ids;
      ids.reserve(cs.size());
      for (const auto& q : cs) ids.push_back(q.id);
      ++stats.global_checks;
      if (!check_global(registry, cs)) continue;

      bool duplicate = false;
      for (const auto& prior : tie_group) {
        ++stats.fallback_comparisons;
        if (is_subset(ids, prior)) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;

      registry.add(ids);
      tie_group.push_back(ids);
      SpatialCluster out;
      out.members = ids;
      out.reference = p.id;
      out.kind = ClusterKind::approx_square;
      sink(out);
    }
  }
  return stats;
}

std::vector<SpatialCluster> find_gasc(std::span<const GeoPoint> points,
                                      double d, int k, double eps,
                                      const RunOptions& opts,
                                      GascStats* stats) {
  std::vector<SpatialCluster> out;
  auto s = find_gasc_stream(
      points, d, k, [&](const SpatialCluster& c) { out.push_back(c); }, eps,
      opts);
  if (stats != nullptr) *stats = s;
  return out;
}

}  // namespace mcc
