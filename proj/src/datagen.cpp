#include "mcc/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mcc/error.hpp"
#include "mcc/spatial_index.hpp"

namespace mcc {

std::string_view to_string(Distribution dist) {
  return dist == Distribution::uniform ? "uniform" : "gaussian";
}

Distribution parse_distribution(std::string_view text) {
  if (text == "uniform") return Distribution::uniform;
  if (text == "gaussian") return Distribution::gaussian;
  throw Error(ErrorCode::invalid_argument,
              "unknown distribution '" + std::string(text) + "'");
}

double PortableRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = mag * std::sin(angle);
  has_spare_ = true;
  return mag * std::cos(angle);
}

double region_side(const GenSpec& spec) {
  return std::sqrt(static_cast<double>(spec.n) / spec.density);
}

std::vector<GeoPoint> generate(const GenSpec& spec) {
  if (spec.n < 1)
    throw Error(ErrorCode::invalid_spec, "n must be at least 1");
  if (!(spec.density > 0.0) || !std::isfinite(spec.density))
    throw Error(ErrorCode::invalid_spec, "density must be positive");
  if (spec.distribution == Distribution::gaussian && spec.n_centers < 1)
    throw Error(ErrorCode::invalid_spec, "gaussian needs at least one center");

  const double side = region_side(spec);
  PortableRng rng(spec.seed);
  std::vector<GeoPoint> pts;
  pts.reserve(spec.n);

  if (spec.distribution == Distribution::uniform) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      const double x = rng.uniform(0.0, side);
      const double y = rng.uniform(0.0, side);
      pts.push_back({static_cast<VertexId>(i), x, y});
    }
    return pts;
  }

  std::vector<std::pair<double, double>> centers;
  for (int c = 0; c < spec.n_centers; ++c)
    centers.emplace_back(rng.uniform(0.0, side), rng.uniform(0.0, side));
  const double sigma = side / (4.0 * std::sqrt(spec.n_centers));

  constexpr int kMaxResample = 64;
  for (std::size_t i = 0; i < spec.n; ++i) {
    const auto& [cx, cy] = centers[rng.below(centers.size())];
    double x = 0.0, y = 0.0;
    for (int attempt = 0;; ++attempt) {
      x = cx + sigma * rng.normal();
      y = cy + sigma * rng.normal();
      const bool inside = x >= 0.0 && x <= side && y >= 0.0 && y <= side;
      if (inside) break;
      if (attempt == kMaxResample) {
        x = std::clamp(x, 0.0, side);
        y = std::clamp(y, 0.0, side);
        break;
      }
    }
    pts.push_back({static_cast<VertexId>(i), x, y});
  }
  return pts;
}

std::vector<std::pair<VertexId, VertexId>> generate_social_edges(
    std::span<const GeoPoint> points, const SocialGenSpec& spec) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (points.size() < 2) return edges;

  // Grid sized so a cell holds a handful of points on average.
  BoundingBox box;
  for (const auto& p : points) {
    if (box.empty) {
      box = {p.x, p.x, p.y, p.y, false};
    } else {
      box.x_lo = std::min(box.x_lo, p.x);
      box.x_hi = std::max(box.x_hi, p.x);
      box.y_lo = std::min(box.y_lo, p.y);
      box.y_hi = std::max(box.y_hi, p.y);
    }
  }
  const double area = std::max((box.x_hi - box.x_lo) * (box.y_hi - box.y_lo),
                               1e-12);
  const double cell =
      std::max(std::sqrt(area / static_cast<double>(points.size())) * 2.0,
               1e-9);
  const GridIndex grid(points, cell);

  const std::size_t want =
      std::min<std::size_t>(std::max(spec.nearest, 0), points.size() - 1);
  for (std::size_t i = 0; i < points.size() && want > 0; ++i) {
    const GeoPoint& p = points[i];
    double radius = cell;
    std::vector<std::uint32_t> near;
    for (;;) {
      near = grid.disk_positions(p.x, p.y, radius);
      if (near.size() >= want + 1 || near.size() == points.size()) break;
      radius *= 2.0;
    }
    std::sort(near.begin(), near.end(), [&](std::uint32_t a, std::uint32_t b) {
      const double da = euclidean_distance(p, points[a]);
      const double db = euclidean_distance(p, points[b]);
      if (da != db) return da < db;
      return points[a].id < points[b].id;
    });
    std::size_t taken = 0;
    for (std::uint32_t j : near) {
      if (j == i) continue;
      edges.emplace_back(p.id, points[j].id);
      if (++taken == want) break;
    }
  }

  PortableRng rng(spec.seed);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (rng.uniform() >= spec.long_range_prob) continue;
    const std::size_t j = rng.below(points.size());
    if (j != i) edges.emplace_back(points[i].id, points[j].id);
  }

  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

LocalityStats locality(std::span<const GeoPoint> points, double radius) {
  LocalityStats s;
  if (points.empty()) return s;
  const GridIndex grid(points, std::max(radius, 1e-9));
  double total = 0.0;
  for (const auto& p : points) {
    const double count =
        static_cast<double>(grid.disk_positions(p.x, p.y, radius).size() - 1);
    total += count;
    s.max_neighbors = std::max(s.max_neighbors, count);
  }
  s.avg_neighbors = total / static_cast<double>(points.size());
  return s;
}

}  // namespace mcc
