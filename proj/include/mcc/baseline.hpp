#pragma once

// Brute-force references for the fast spatial paths, the clique baseline, and
// a minimum enclosing circle validator. Oracles are intended for a few
// hundred points at most.

#include <cstdint>
#include <span>
#include <vector>

#include "mcc/model.hpp"
#include "mcc/parallel.hpp"

namespace mcc {

// Evaluates every critical angle (window ends) and the midpoints between
// consecutive ones; returns the maximal enclosed sets, each with v added.
std::vector<SpatialCluster> oracle_lsc(const GeoPoint& v,
                                       std::span<const GeoPoint> candidates,
                                       double r, double eps = kDefaultEps);

// Circles of radius d/2 centered at each point and through each pair of points
// at distance <= d; returns the maximal enclosed sets.
std::vector<SpatialCluster> oracle_gsc(std::span<const GeoPoint> points,
                                       double d, double eps = kDefaultEps);

// Squares [a.x, a.x + d] x [b.y - d, b.y] for every ordered pair (a, b)
// containing both; returns the maximal enclosed sets.
std::vector<SpatialCluster> oracle_gasc(std::span<const GeoPoint> points,
                                        double d, double eps = kDefaultEps);

struct CliqueOptions {
  std::uint64_t max_cliques = 10'000'000;
};

// Maximal cliques of the proximity graph (edge iff distance <= d + eps), via
// Bron-Kerbosch with Tomita pivoting. Throws clique_budget_exceeded.
std::vector<SpatialCluster> clique_clusters(std::span<const GeoPoint> points,
                                            double d, double eps = kDefaultEps,
                                            const CliqueOptions& clique = {},
                                            const RunOptions& opts = {});

struct Circle {
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
};

// Exact minimum enclosing circle (Welzl, move-to-front, iterative form).
// Throws empty_input.
Circle min_enclosing_circle(std::span<const GeoPoint> points);

double max_pairwise_distance(std::span<const GeoPoint> points);

}  // namespace mcc
