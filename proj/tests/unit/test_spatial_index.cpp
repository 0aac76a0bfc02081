#include <doctest.h>

#include <algorithm>
#include <random>

#include "mcc/error.hpp"
#include "mcc/spatial_index.hpp"

using namespace mcc;

namespace {

std::vector<VertexId> naive_disk(const std::vector<GeoPoint>& pts,
                                 const GeoPoint& c, double radius) {
  std::vector<VertexId> out;
  for (const auto& p : pts)
    if (euclidean_distance(p, c) <= radius + kDefaultEps) out.push_back(p.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> naive_rect(const std::vector<GeoPoint>& pts, double xl,
                                 double xh, double yl, double yh) {
  std::vector<VertexId> out;
  const double e = kDefaultEps;
  for (const auto& p : pts)
    if (p.x >= xl - e && p.x <= xh + e && p.y >= yl - e && p.y <= yh + e)
      out.push_back(p.id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("points land in floor cells") {
  const std::vector<GeoPoint> one{{0, 0, 0}, {1, 0.5, 0.5}};
  const GridIndex g1(one, 1.0);
  CHECK(g1.bucket_count() == 1);
  CHECK(g1.bucket({0, 0}).size() == 2);

  const std::vector<GeoPoint> two{{0, 0, 0}, {1, 1.5, 0}};
  const GridIndex g2(two, 1.0);
  CHECK(g2.bucket_count() == 2);
  CHECK(g2.bucket({1, 0}).size() == 1);
  CHECK(g2.cell_of(-0.5, 2.0) == GridIndex::Cell{-1, 2});

  const GridIndex empty(std::vector<GeoPoint>{}, 1.0);
  CHECK(empty.bucket_count() == 0);
  CHECK(empty.range_query_disk({0, 0, 0}, 5).empty());
}

TEST_CASE("non-positive cell size") {
  try {
    build_grid(std::vector<GeoPoint>{}, 0.0);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_positive_cell_size);
  }
}

TEST_CASE("disk query is closed") {
  const std::vector<GeoPoint> pts{{0, 0, 0}, {1, 3, 4}, {2, 10, 10}};
  const GridIndex g(pts, 5.0);
  CHECK(g.range_query_disk({9, 0, 0}, 5) == std::vector<VertexId>{0, 1});
  CHECK(g.range_query_disk({9, 0, 0}, 0) == std::vector<VertexId>{0});
  CHECK(g.range_query_disk({9, 0.5, 0}, 0).empty());
  CHECK_THROWS_AS(g.range_query_disk({9, 0, 0}, -1), Error);
}

TEST_CASE("rect query is closed and validates its range") {
  const std::vector<GeoPoint> pts{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 1, 0.5}};
  const GridIndex g(pts, 1.0);
  CHECK(g.range_query_rect(0, 1, 0, 1) == std::vector<VertexId>{0, 1, 3});
  CHECK(g.range_query_rect(1, 1, 0, 2) == std::vector<VertexId>{1, 3});
  try {
    g.range_query_rect(2, 1, 0, 1);
    FAIL("expected empty_range");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_range);
  }
  CHECK_THROWS_AS(g.range_query_rect(0, 1, 3, 1), Error);
}

TEST_CASE("grid queries equal a naive scan on random data") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-50, 50);
  std::uniform_real_distribution<double> size(0, 30);
  std::uniform_real_distribution<double> cell(0.5, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<GeoPoint> pts;
    const int n = 1 + trial % 100;
    for (int idx = 0; idx < n; ++idx)
      pts.push_back({idx * 7 - 30, coord(rng), coord(rng)});
    // Some exact duplicates and boundary-aligned points.
    if (n > 3) pts[1] = {pts[1].id, pts[0].x, pts[0].y};
    const GridIndex g(pts, cell(rng));

    const GeoPoint c{0, coord(rng), coord(rng)};
    const double radius = size(rng);
    REQUIRE(g.range_query_disk(c, radius) == naive_disk(pts, c, radius));

    const double xl = coord(rng), yl = coord(rng);
    const double xh = xl + size(rng), yh = yl + size(rng);
    REQUIRE(g.range_query_rect(xl, xh, yl, yh) == naive_rect(pts, xl, xh, yl, yh));

    // Query centered on an indexed point includes it.
    const auto around = g.range_query_disk(pts[0], 0.0);
    CHECK(std::binary_search(around.begin(), around.end(), pts[0].id));
  }
}

TEST_CASE("every point is in exactly one bucket") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-20, 20);
  std::vector<GeoPoint> pts;
  for (int idx = 0; idx < 300; ++idx) pts.push_back({idx, coord(rng), coord(rng)});
  const GridIndex g(pts, 3.0);
  for (std::uint32_t pos = 0; pos < pts.size(); ++pos) {
    const auto in = g.bucket(g.cell_of(pts[pos].x, pts[pos].y));
    CHECK(std::count(in.begin(), in.end(), pos) == 1);
  }
  std::vector<GridIndex::Cell> cells;
  for (const auto& p : pts) {
    const auto c = g.cell_of(p.x, p.y);
    if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
  }
  std::size_t total = 0;
  for (const auto& c : cells) total += g.bucket(c).size();
  CHECK(total == pts.size());
  CHECK(cells.size() == g.bucket_count());
}
