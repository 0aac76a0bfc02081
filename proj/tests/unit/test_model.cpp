#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mcc/error.hpp"
#include "mcc/model.hpp"

using namespace mcc;

TEST_CASE("build_network drops self-loops and duplicate edges") {
  const std::vector<std::pair<VertexId, VertexId>> edges{{1, 2}, {2, 1}, {2, 2}};
  const auto net = build_network({{1, 0, 0}, {2, 1, 0}, {3, 2, 0}}, edges);
  CHECK(net.size() == 3);
  CHECK(net.graph().edge_count() == 1);
  CHECK(net.edges() == std::vector<std::pair<VertexId, VertexId>>{{1, 2}});
  const auto u = *net.index_of(1);
  const auto v = *net.index_of(2);
  CHECK(net.graph().has_edge(u, v));
  CHECK(net.graph().has_edge(v, u));
}

TEST_CASE("build_network on empty input") {
  const auto net = build_network({}, {});
  CHECK(net.size() == 0);
  CHECK(net.edges().empty());
}

TEST_CASE("build_network rejects unknown endpoints and duplicate ids") {
  const std::vector<std::pair<VertexId, VertexId>> bad{{1, 9}};
  try {
    build_network({{1, 0, 0}}, bad);
    FAIL("expected unknown_vertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_vertex);
  }
  try {
    build_network({{1, 0, 0}, {1, 1, 1}}, {});
    FAIL("expected duplicate_id");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::duplicate_id);
  }
  CHECK_THROWS_AS(build_network({{1, NAN, 0}}, {}), Error);
}

TEST_CASE("build_network is idempotent") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 10);
  std::vector<GeoPoint> pts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId id = 0; id < 40; ++id) pts.push_back({id * 3, u(rng), u(rng)});
  std::uniform_int_distribution<int> pick(0, 39);
  for (int e = 0; e < 120; ++e)
    edges.emplace_back(pick(rng) * 3, pick(rng) * 3);
  const auto once = build_network(pts, edges);
  const auto twice = build_network(
      std::vector<GeoPoint>(once.points().begin(), once.points().end()), once.edges());
  CHECK(once == twice);
}

TEST_CASE("point lookup") {
  const auto net = build_network({{5, 1, 2}}, {});
  CHECK(net.point(5).x == 1);
  CHECK_FALSE(net.index_of(6).has_value());
  CHECK_THROWS_AS(net.point(6), Error);
}

TEST_CASE("euclidean_distance") {
  CHECK(euclidean_distance({0, 0, 0}, {1, 3, 4}) == 5.0);
  CHECK(euclidean_distance({0, 2.5, -1}, {1, 2.5, -1}) == 0.0);
  CHECK(euclidean_distance({0, 0, 0}, {1, 1, 1}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Params validation") {
  const auto p = Params::make(3.0, 2);
  CHECK(p.r == 1.5);
  CHECK_THROWS_AS(Params::make(0.0, 1), Error);
  CHECK_THROWS_AS(Params::make(1.0, 0), Error);
  CHECK_THROWS_AS(Params::make(1.0, 1, SocialKind::core, -1.0), Error);
}

TEST_CASE("cluster equality ignores insertion order") {
  std::vector<VertexId> members{5, 3, 9, 1, 3};
  std::mt19937_64 rng(1);
  const auto base = SpatialCluster::make(members, 3, ClusterKind::exact_circle);
  CHECK(base.members == std::vector<VertexId>{1, 3, 5, 9});
  for (int t = 0; t < 20; ++t) {
    std::shuffle(members.begin(), members.end(), rng);
    CHECK(SpatialCluster::make(members, 3, ClusterKind::exact_circle) == base);
  }
  const auto with_ref = SpatialCluster::make({4, 2}, 7, ClusterKind::approx_square);
  CHECK(with_ref.members == std::vector<VertexId>{2, 4, 7});
}

TEST_CASE("subset helpers") {
  const std::vector<VertexId> a{1, 3}, b{1, 2, 3};
  CHECK(is_subset(a, b));
  CHECK_FALSE(is_subset(b, a));
  const auto kept = maximal_sets({{1, 2}, {1, 2, 3}, {4}, {4}, {2, 3}, {}});
  CHECK(kept == std::vector<std::vector<VertexId>>{{1, 2, 3}, {4}});
}

TEST_CASE("enum labels round-trip") {
  CHECK(parse_social_kind(to_string(SocialKind::truss)) == SocialKind::truss);
  CHECK(parse_social_kind("core") == SocialKind::core);
  CHECK_THROWS_AS(parse_social_kind("clique"), Error);
  CHECK(to_string(Provenance::approx_sqrt2) == "approximate (sqrt2)");
  CHECK(to_string(ErrorCode::timeout) == "Timeout");
}
