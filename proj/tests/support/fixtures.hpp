#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "mcc/model.hpp"

namespace mcc::testing {

// Twelve users on a grid, ids a=0 b=1 c=2 d=3 e=4 f=5 g=6 i=7 j=8 k=9 l=10
// m=11. With d = 4 and a 2-core constraint the MCCs are {a,b,c,d} and
// {i,j,k,l}.
enum GridUser : VertexId { a, b, c, d, e, f, g, i, j, k, l, m };

inline GeoSocialNetwork grid_network() {
  std::vector<GeoPoint> pts{
      {a, 0, 0}, {b, 2, 0},  {c, 0, 2},  {d, 2, 2},  {e, 4, 1},  {f, 5, 3},
      {g, 6, 0}, {i, 8, 0},  {j, 10, 0}, {k, 10, 2}, {l, 11, 1}, {m, 13, 1}};
  const std::vector<std::pair<VertexId, VertexId>> edges{
      {a, b}, {b, d}, {d, c}, {c, a}, {b, e}, {e, f}, {e, g},
      {i, j}, {i, k}, {j, k}, {k, l}, {l, j}, {m, l}};
  return build_network(std::move(pts), edges);
}

inline std::vector<GeoPoint> random_points(std::size_t n, double side,
                                           std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<GeoPoint> pts;
  pts.reserve(n);
  for (std::size_t idx = 0; idx < n; ++idx)
    pts.push_back({static_cast<VertexId>(idx), u(rng), u(rng)});
  return pts;
}

// Clustered cloud: points scattered around a few centers.
inline std::vector<GeoPoint> random_clustered_points(std::size_t n, double side,
                                                     int centers,
                                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, side);
  std::normal_distribution<double> noise(0.0, side / (4.0 * std::sqrt(centers)));
  std::vector<std::pair<double, double>> c;
  for (int idx = 0; idx < centers; ++idx) c.emplace_back(u(rng), u(rng));
  std::uniform_int_distribution<int> pick(0, centers - 1);
  std::vector<GeoPoint> pts;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto& [cx, cy] = c[pick(rng)];
    pts.push_back({static_cast<VertexId>(idx), cx + noise(rng), cy + noise(rng)});
  }
  return pts;
}

inline std::vector<std::pair<VertexId, VertexId>> random_edges(
    std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng))
        out.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return out;
}

// Edges favouring spatially close pairs, so co-located communities exist.
inline std::vector<std::pair<VertexId, VertexId>> local_edges(
    const std::vector<GeoPoint>& pts, double radius, double p_near,
    double p_far, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t x = 0; x < pts.size(); ++x) {
    for (std::size_t y = x + 1; y < pts.size(); ++y) {
      const double p = euclidean_distance(pts[x], pts[y]) <= radius ? p_near
                                                                    : p_far;
      if (u(rng) < p) out.emplace_back(pts[x].id, pts[y].id);
    }
  }
  return out;
}

}  // namespace mcc::testing
