#include "mcc/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mcc/error.hpp"
#include "mcc/spatial_index.hpp"
#include "mcc/sweep_exact.hpp"

namespace mcc {
namespace {

std::vector<SpatialCluster> wrap(std::vector<std::vector<VertexId>> sets,
                                 ClusterKind kind) {
  std::vector<SpatialCluster> out;
  out.reserve(sets.size());
  for (auto& s : sets) {
    SpatialCluster c;
    c.reference = s.empty() ? 0 : s.front();
    c.members = std::move(s);
    c.kind = kind;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VertexId> members_in_disk(std::span<const GeoPoint> points,
                                      double cx, double cy, double radius) {
  std::vector<VertexId> out;
  for (const auto& p : points) {
    if (planar_norm(p.x - cx, p.y - cy) <= radius) out.push_back(p.id);
  }
  return out;
}

}  // namespace

std::vector<SpatialCluster> oracle_lsc(const GeoPoint& v,
                                       std::span<const GeoPoint> candidates,
                                       double r, double eps) {
  constexpr double kPi = std::numbers::pi;
  std::vector<double> angles{0.0};
  for (const auto& u : candidates) {
    const AngularInterval iv = angular_interval(v, u, r, eps);
    if (iv.full_circle) continue;
    angles.push_back(iv.start);
    angles.push_back(iv.end);
  }
  for (double& a : angles) a = std::remainder(a, 2.0 * kPi);
  std::sort(angles.begin(), angles.end());
  const std::size_t critical = angles.size();
  for (std::size_t i = 0; i + 1 < critical; ++i)
    angles.push_back(0.5 * (angles[i] + angles[i + 1]));
  angles.push_back(0.5 * (angles[critical - 1] + angles[0] + 2.0 * kPi));

  std::vector<std::vector<VertexId>> sets;
  for (double theta : angles) {
    const double cx = v.x + r * std::cos(theta);
    const double cy = v.y + r * std::sin(theta);
    auto members = members_in_disk(candidates, cx, cy, r + eps);
    members.push_back(v.id);
    sets.push_back(std::move(members));
  }
  auto out = wrap(maximal_sets(std::move(sets)), ClusterKind::exact_circle);
  for (auto& c : out) c.reference = v.id;
  return out;
}

std::vector<SpatialCluster> oracle_gsc(std::span<const GeoPoint> points,
                                       double d, double eps) {
  if (!(d > 0.0))
    throw Error(ErrorCode::invalid_argument, "d must be positive");
  const double r = d / 2.0;
  std::vector<std::vector<VertexId>> sets;
  for (const auto& p : points)
    sets.push_back(members_in_disk(points, p.x, p.y, r + eps));

  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const GeoPoint& a = points[i];
      const GeoPoint& b = points[j];
      const double dist = euclidean_distance(a, b);
      if (dist > 2.0 * r + eps) continue;
      const double mx = 0.5 * (a.x + b.x);
      const double my = 0.5 * (a.y + b.y);
      if (dist == 0.0) continue;  // covered by the point-centered circle
      const double h = std::sqrt(std::max(0.0, r * r - 0.25 * dist * dist));
      const double nx = -(b.y - a.y) / dist;
      const double ny = (b.x - a.x) / dist;
      sets.push_back(members_in_disk(points, mx + h * nx, my + h * ny, r + eps));
      if (h > 0.0)
        sets.push_back(
            members_in_disk(points, mx - h * nx, my - h * ny, r + eps));
    }
  }
  return wrap(maximal_sets(std::move(sets)), ClusterKind::exact_circle);
}

std::vector<SpatialCluster> oracle_gasc(std::span<const GeoPoint> points,
                                        double d, double eps) {
  if (!(d > 0.0))
    throw Error(ErrorCode::invalid_argument, "d must be positive");
  auto inside = [&](const GeoPoint& p, double x_lo, double y_hi) {
    return p.x >= x_lo - eps && p.x <= x_lo + d + eps && p.y >= y_hi - d - eps &&
           p.y <= y_hi + eps;
  };
  std::vector<std::vector<VertexId>> sets;
  for (const auto& a : points) {
    for (const auto& b : points) {
      if (!inside(a, a.x, b.y) || !inside(b, a.x, b.y)) continue;
      std::vector<VertexId> members;
      for (const auto& p : points) {
        if (inside(p, a.x, b.y)) members.push_back(p.id);
      }
      sets.push_back(std::move(members));
    }
  }
  return wrap(maximal_sets(std::move(sets)), ClusterKind::approx_square);
}

namespace {

class CliqueEnumerator {
 public:
  CliqueEnumerator(const std::vector<std::vector<std::uint32_t>>& adj,
                   std::span<const GeoPoint> points,
                   const CliqueOptions& clique, const RunOptions& opts)
      : adj_(adj), points_(points), clique_(clique), opts_(opts) {}

  void run() {
    std::vector<std::uint32_t> p(adj_.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = i;
    std::vector<std::uint32_t> r, x;
    expand(r, std::move(p), std::move(x));
  }

  std::vector<std::vector<VertexId>> take() { return std::move(cliques_); }

 private:
  std::vector<std::uint32_t> intersect(const std::vector<std::uint32_t>& set,
                                       std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t w : adj_[v]) {
      if (std::binary_search(set.begin(), set.end(), w)) out.push_back(w);
    }
    return out;
  }

  std::size_t count_in(const std::vector<std::uint32_t>& set,
                       std::uint32_t v) const {
    std::size_t c = 0;
    for (std::uint32_t w : adj_[v]) {
      if (std::binary_search(set.begin(), set.end(), w)) ++c;
    }
    return c;
  }

  void expand(std::vector<std::uint32_t>& r, std::vector<std::uint32_t> p,
              std::vector<std::uint32_t> x) {
    if ((++calls_ & 0x3FF) == 0) opts_.check_deadline();
    if (p.empty()) {
      if (x.empty()) report(r);
      return;
    }
    // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
    std::uint32_t pivot = p.front();
    std::size_t best = 0;
    bool first = true;
    for (const auto* set : {&p, &x}) {
      for (std::uint32_t u : *set) {
        const std::size_t c = count_in(p, u);
        if (first || c > best) {
          best = c;
          pivot = u;
          first = false;
        }
      }
    }
    std::vector<std::uint32_t> branch;
    for (std::uint32_t v : p) {
      if (!std::binary_search(adj_[pivot].begin(), adj_[pivot].end(), v))
        branch.push_back(v);
    }
    for (std::uint32_t v : branch) {
      r.push_back(v);
      expand(r, intersect(p, v), intersect(x, v));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  void report(const std::vector<std::uint32_t>& r) {
    if (cliques_.size() >= clique_.max_cliques)
      throw Error(ErrorCode::clique_budget_exceeded,
                  "maximal clique budget exceeded");
    std::vector<VertexId> ids;
    ids.reserve(r.size());
    for (std::uint32_t v : r) ids.push_back(points_[v].id);
    std::sort(ids.begin(), ids.end());
    cliques_.push_back(std::move(ids));
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::span<const GeoPoint> points_;
  CliqueOptions clique_;
  const RunOptions& opts_;
  std::vector<std::vector<VertexId>> cliques_;
  std::uint64_t calls_ = 0;
};

}  // namespace

std::vector<SpatialCluster> clique_clusters(std::span<const GeoPoint> points,
                                            double d, double eps,
                                            const CliqueOptions& clique,
                                            const RunOptions& opts) {
  if (!(d > 0.0))
    throw Error(ErrorCode::invalid_argument, "d must be positive");
  const GridIndex grid(points, d, eps);
  std::vector<std::vector<std::uint32_t>> adj(points.size());
  parallel_for(points.size(), opts.threads, [&](std::size_t i) {
    auto near = grid.disk_positions(points[i].x, points[i].y, d);
    std::erase(near, static_cast<std::uint32_t>(i));
    adj[i] = std::move(near);
  });

  CliqueEnumerator bk(adj, points, clique, opts);
  bk.run();
  auto sets = bk.take();
  std::sort(sets.begin(), sets.end());
  return wrap(std::move(sets), ClusterKind::all_pair);
}

namespace {

Circle circle_from(const GeoPoint& a, const GeoPoint& b) {
  const double cx = 0.5 * (a.x + b.x);
  const double cy = 0.5 * (a.y + b.y);
  return Circle{cx, cy, 0.5 * planar_norm(a.x - b.x, a.y - b.y)};
}

Circle circle_from(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c) {
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double det = 2.0 * (bx * cy - by * cx);
  if (std::abs(det) < 1e-18) {
    // Collinear: the widest pair spans the circle.
    Circle best = circle_from(a, b);
    for (const Circle& alt : {circle_from(a, c), circle_from(b, c)}) {
      if (alt.radius > best.radius) best = alt;
    }
    return best;
  }
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / det;
  const double uy = (bx * c2 - cx * b2) / det;
  return Circle{a.x + ux, a.y + uy, planar_norm(ux, uy)};
}

bool contains(const Circle& c, const GeoPoint& p) {
  return planar_norm(p.x - c.x, p.y - c.y) <= c.radius * (1.0 + 1e-12) + 1e-12;
}

}  // namespace

Circle min_enclosing_circle(std::span<const GeoPoint> points) {
  if (points.empty())
    throw Error(ErrorCode::empty_input,
                "minimum enclosing circle of an empty set");
  std::vector<GeoPoint> pts(points.begin(), points.end());
  std::mt19937_64 rng(0x5EEDC1AC1Eull);
  std::shuffle(pts.begin(), pts.end(), rng);

  Circle c{pts[0].x, pts[0].y, 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (contains(c, pts[i])) continue;
    c = Circle{pts[i].x, pts[i].y, 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (contains(c, pts[j])) continue;
      c = circle_from(pts[i], pts[j]);
      for (std::size_t l = 0; l < j; ++l) {
        if (!contains(c, pts[l])) c = circle_from(pts[i], pts[j], pts[l]);
      }
    }
  }
  return c;
}

double max_pairwise_distance(std::span<const GeoPoint> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j)
      best = std::max(best, euclidean_distance(points[i], points[j]));
  }
  return best;
}

}  // namespace mcc
