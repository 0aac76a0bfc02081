#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "mcc/baseline.hpp"
#include "mcc/error.hpp"

using namespace mcc;
using Sets = std::vector<std::vector<VertexId>>;

TEST_CASE("oracle_lsc examples") {
  const GeoPoint v{0, 0, 0};
  const std::vector<GeoPoint> two{{1, 1, 0}, {2, 0, 1}};
  CHECK(member_sets(oracle_lsc(v, two, 1.0)) == Sets{{0, 1, 2}});
  // Witness angle pi/4 encloses both.
  const double c = std::cos(std::numbers::pi / 4);
  CHECK(std::hypot(1 - c, 0 - c) <= 1.0);
  CHECK(member_sets(oracle_lsc(v, {}, 1.0)) == Sets{{0}});
  const std::vector<GeoPoint> same{{1, 0, 0}, {2, 0, 0}};
  CHECK(member_sets(oracle_lsc(v, same, 1.0)) == Sets{{0, 1, 2}});
  const std::vector<GeoPoint> far{{1, 5, 0}};
  CHECK_THROWS_AS(oracle_lsc(v, far, 1.0), Error);
}

TEST_CASE("oracle_gsc examples") {
  const std::vector<GeoPoint> near{{0, 0, 0}, {1, 1, 0}};
  CHECK(member_sets(oracle_gsc(near, 2.0)) == Sets{{0, 1}});
  const std::vector<GeoPoint> apart{{0, 0, 0}, {1, 3, 0}};
  CHECK(member_sets(oracle_gsc(apart, 2.0)) == Sets{{0}, {1}});
  const double h = std::sqrt(3.0) / 2;
  const std::vector<GeoPoint> tri{{0, 0, 0}, {1, 1, 0}, {2, 0.5, h}};
  CHECK(member_sets(oracle_gsc(tri, 1.2)) == Sets{{0, 1, 2}});
  CHECK(member_sets(oracle_gsc(tri, 1.1)) == Sets{{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(oracle_gsc(tri, 0.0), Error);
}

TEST_CASE("oracle_gasc examples") {
  const std::vector<GeoPoint> corner{{0, 0, 0}, {1, 1, 1}};
  CHECK(member_sets(oracle_gasc(corner, 1.0)) == Sets{{0, 1}});
  const std::vector<GeoPoint> beyond{{0, 0, 0}, {1, 1.01, 1.01}};
  CHECK(member_sets(oracle_gasc(beyond, 1.0)) == Sets{{0}, {1}});
}

TEST_CASE("clique_clusters examples") {
  const std::vector<GeoPoint> tri{{0, 0, 0}, {1, 1, 0}, {2, 0.5, 0.5}};
  CHECK(member_sets(clique_clusters(tri, 1.0)) == Sets{{0, 1, 2}});
  const std::vector<GeoPoint> path{{0, 0, 0}, {1, 1, 0}, {2, 2, 0}};
  const auto got = clique_clusters(path, 1.0);
  CHECK(member_sets(got) == Sets{{0, 1}, {1, 2}});
  CHECK(got[0].kind == ClusterKind::all_pair);
}

TEST_CASE("clique budget") {
  const std::vector<GeoPoint> path{{0, 0, 0}, {1, 1, 0}, {2, 2, 0}};
  try {
    clique_clusters(path, 1.0, kDefaultEps, CliqueOptions{1});
    FAIL("expected clique_budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::clique_budget_exceeded);
  }
}

TEST_CASE("every oracle cluster sits inside a clique") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = testing::random_points(50, 30, rng);
    const double d = 6.0;
    const auto cliques = member_sets(clique_clusters(pts, d));
    for (const auto& g : member_sets(oracle_gsc(pts, d))) {
      const bool inside = std::any_of(cliques.begin(), cliques.end(),
                                      [&](const auto& c) { return is_subset(g, c); });
      CHECK(inside);
    }
    // Cliques are pairwise within d and maximal.
    for (const auto& c : cliques) {
      for (VertexId x : c)
        for (VertexId y : c) CHECK(euclidean_distance(pts[x], pts[y]) <= d + 1e-9);
    }
    CHECK(maximal_sets(cliques) == cliques);
  }
}

TEST_CASE("min_enclosing_circle") {
  const std::vector<GeoPoint> one{{0, 2, 3}};
  CHECK(min_enclosing_circle(one).radius == 0.0);
  const std::vector<GeoPoint> two{{0, 0, 0}, {1, 4, 0}};
  const auto c2 = min_enclosing_circle(two);
  CHECK(c2.x == doctest::Approx(2));
  CHECK(c2.y == doctest::Approx(0));
  CHECK(c2.radius == doctest::Approx(2));
  const double h = std::sqrt(3.0) / 2;
  const std::vector<GeoPoint> tri{{0, 0, 0}, {1, 1, 0}, {2, 0.5, h}};
  CHECK(min_enclosing_circle(tri).radius == doctest::Approx(1 / std::sqrt(3.0)));
  try {
    min_enclosing_circle(std::vector<GeoPoint>{});
    FAIL("expected empty_input");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_input);
  }
}

TEST_CASE("min_enclosing_circle encloses and is minimal") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = testing::random_points(1 + trial % 40, 10, rng);
    const auto c = min_enclosing_circle(pts);
    for (const auto& p : pts) CHECK(std::hypot(p.x - c.x, p.y - c.y) <= c.radius + 1e-9);
    // Any enclosing circle has radius >= half the diameter; and the circle
    // from the brute-force oracle over pairs and triples is no smaller.
    CHECK(c.radius >= max_pairwise_distance(pts) / 2 - 1e-9);
    CHECK(c.radius <= max_pairwise_distance(pts) / std::sqrt(3.0) + 1e-9);
  }
}

TEST_CASE("oracle_gsc is invariant under rigid motion and relabeling") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = testing::random_points(40, 25, rng);
    const double angle = 0.3 + trial;
    std::vector<GeoPoint> moved;
    for (const auto& p : pts) {
      moved.push_back({1000 - p.id, 7 + p.x * std::cos(angle) - p.y * std::sin(angle),
                       -3 + p.x * std::sin(angle) + p.y * std::cos(angle)});
    }
    Sets relabeled;
    for (auto s : member_sets(oracle_gsc(pts, 7.0))) {
      for (auto& id : s) id = 1000 - id;
      std::sort(s.begin(), s.end());
      relabeled.push_back(std::move(s));
    }
    std::sort(relabeled.begin(), relabeled.end());
    CHECK(member_sets(oracle_gsc(moved, 7.0)) == relabeled);
  }
}
