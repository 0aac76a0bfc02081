#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "mcc/bench.hpp"
#include "mcc/error.hpp"
#include "mcc/framework.hpp"
#include "mcc/io.hpp"

using namespace mcc;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mcc_test_" + name);
}

}  // namespace

TEST_CASE("parse_locations") {
  std::istringstream in("# id\tx\ty\n0\t1.5\t2.5\n\n7\t-3\t1e2\n");
  const auto pts = parse_locations(in);
  CHECK(pts == std::vector<GeoPoint>{{0, 1.5, 2.5}, {7, -3, 100}});
}

TEST_CASE("parse_locations errors carry line numbers") {
  std::istringstream bad("0\tx\t2\n");
  try {
    parse_locations(bad);
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(e.line() == 1u);
  }
  std::istringstream short_row("# c\n0\t1\t2\n1\t2\n");
  try {
    parse_locations(short_row);
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.line() == 3u);
  }
  std::istringstream dup("1\t0\t0\n1\t1\t1\n");
  try {
    parse_locations(dup);
    FAIL("expected duplicate_id");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::duplicate_id);
  }
  std::istringstream nan("1\tnan\t0\n");
  CHECK_THROWS_AS(parse_locations(nan), Error);
  CHECK_THROWS_AS(load_locations("/nonexistent/file.tsv"), Error);
}

TEST_CASE("locations round-trip bitwise") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::vector<GeoPoint> pts;
  for (VertexId id = 0; id < 2000; ++id) pts.push_back({id * 13 - 5, u(rng), u(rng) * 1e-7});
  pts.push_back({999999, 0.1, 1.0 / 3.0});
  const auto path = temp_file("roundtrip.tsv");
  write_locations(path.string(), pts);
  CHECK(load_locations(path.string()) == pts);
  std::filesystem::remove(path);
}

TEST_CASE("parse_checkins policies and projection") {
  const std::string data =
      "7\t2010-10-19T23:55:27Z\t1.0\t2.0\t100\n"
      "7\t2010-10-20T10:00:00Z\t3.0\t4.0\t101\n"
      "8\t2010-10-18T00:00:00Z\t0.0\t0.0\t102\n";
  std::istringstream in1(data);
  const auto latest = parse_checkins(in1, CheckinPolicy::latest);
  REQUIRE(latest.size() == 2);
  // Centroid of (3,4) and (0,0) is (1.5, 2).
  const auto want7 = project({3.0, 4.0}, {1.5, 2.0});
  CHECK(latest[0].id == 7);
  CHECK(latest[0].x == doctest::Approx(want7.first));
  CHECK(latest[0].y == doctest::Approx(want7.second));

  std::istringstream in2("5\tt1\t0\t0\t1\n5\tt2\t2\t2\t1\n");
  const auto mean = parse_checkins(in2, CheckinPolicy::mean);
  REQUIRE(mean.size() == 1);
  // A single user sits at the centroid.
  CHECK(mean[0].x == 0.0);
  CHECK(mean[0].y == 0.0);

  const auto origin = project({45.0, 9.0}, {45.0, 9.0});
  CHECK(origin.first == 0.0);
  CHECK(origin.second == 0.0);
  const auto north = project({1.0, 0.0}, {0.0, 0.0});
  CHECK(north.second == doctest::Approx(kEarthRadiusMeters * std::acos(-1.0) / 180));

  std::istringstream bad("5\tt1\tx\t0\t1\n");
  CHECK_THROWS_AS(parse_checkins(bad, CheckinPolicy::latest), Error);
  CHECK(parse_checkin_policy("mean") == CheckinPolicy::mean);
  CHECK_THROWS_AS(parse_checkin_policy("first"), Error);
}

TEST_CASE("parse_checkins mean is taken before projection") {
  std::istringstream in("1\ta\t0\t0\tz\n1\tb\t2\t2\tz\n2\ta\t10\t10\tz\n");
  const auto pts = parse_checkins(in, CheckinPolicy::mean);
  REQUIRE(pts.size() == 2);
  const auto want = project({1.0, 1.0}, {5.5, 5.5});
  CHECK(pts[0].x == doctest::Approx(want.first));
  CHECK(pts[0].y == doctest::Approx(want.second));
}

TEST_CASE("parse_edges") {
  std::istringstream in("1\t2\n1\t1\n");
  CHECK(parse_edges(in) == std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {1, 1}});
  std::istringstream bad("1 2\n");
  try {
    parse_edges(bad);
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.line() == 1u);
  }
}

TEST_CASE("write_communities") {
  using namespace testing;
  const auto net = grid_network();
  DetectionConfig cfg;
  cfg.params = Params::make(4.0, 2);
  const auto found = detect_mccs(net, cfg);

  std::ostringstream empty;
  write_communities(empty, std::vector<Community>{}, net, {"exact-r12", 4.0});
  CHECK(empty.str().empty());

  std::ostringstream out;
  write_communities(out, found, net, {"exact-r12", 4.0});
  std::istringstream lines(out.str());
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["members"] == std::vector<VertexId>{a, b, c, d});
  CHECK(rows[1]["members"] == std::vector<VertexId>{i, j, k, l});
  CHECK(rows[0]["k"] == 2);
  CHECK(rows[0]["social"] == "core");
  CHECK(rows[0]["algo"] == "exact-r12");
  CHECK(rows[0]["d"] == 4.0);
  CHECK(rows[0]["diameter"].get<double>() == doctest::Approx(std::sqrt(8.0)));
  CHECK(rows[0]["mec_radius"].get<double>() == doctest::Approx(std::sqrt(2.0)));
  CHECK(out.str().substr(0, 12) == "{\"members\":[");
}

TEST_CASE("approximate output respects the diameter bound") {
  std::mt19937_64 rng(72);
  auto pts = testing::random_points(150, 40, rng);
  const auto edges = testing::local_edges(pts, 8, 0.6, 0.0, rng);
  const auto net = build_network(pts, edges);
  DetectionConfig cfg;
  cfg.params = Params::make(6.0, 2);
  cfg.spatial_algo = SpatialAlgo::approx;
  std::ostringstream out;
  write_communities(out, detect_mccs(net, cfg), net, {"approx", 6.0});
  std::istringstream lines(out.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto row = nlohmann::json::parse(line);
    CHECK(row["diameter"].get<double>() <= std::sqrt(2.0) * 6.0 + 1e-9);
    ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("bench grid cardinality and monotone comparisons") {
  BenchConfig cfg;
  cfg.algos = {SpatialAlgo::exact, SpatialAlgo::approx};
  cfg.ns = {1000, 2000};
  cfg.ds = {30};
  const auto rows = run_bench(cfg);
  CHECK(rows.size() == 4);
  for (const auto& r : rows) CHECK(r.status == "ok");

  BenchConfig prune;
  prune.algos = {SpatialAlgo::exact_rule1, SpatialAlgo::exact_rule12};
  prune.ns = {800};
  prune.ds = {15, 30};
  const auto pr = run_bench(prune);
  REQUIRE(pr.size() == 4);
  CHECK(pr[2].comparisons <= pr[0].comparisons);
  CHECK(pr[3].comparisons <= pr[1].comparisons);
  CHECK(pr[0].clusters == pr[2].clusters);

  std::ostringstream csv;
  write_bench_csv(csv, rows);
  CHECK(csv.str().rfind(std::string(kBenchHeader) + "\n", 0) == 0);
}

TEST_CASE("bench marks timeouts and errors without aborting") {
  BenchConfig cfg;
  cfg.algos = {SpatialAlgo::exact, SpatialAlgo::clique};
  cfg.ns = {30000};
  cfg.ds = {30};
  cfg.timeout_s = 1e-6;
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.status == "timeout");
    CHECK(r.seconds == 1e-6);
  }
  BenchConfig budget;
  budget.algos = {SpatialAlgo::clique};
  budget.ns = {500};
  budget.clique.max_cliques = 1;
  const auto b = run_bench(budget);
  REQUIRE(b.size() == 1);
  CHECK(b[0].status == "error:CliqueBudgetExceeded");
  BenchConfig bad;
  bad.ds = {-1};
  CHECK(run_bench(bad)[0].status == "error:InvalidArgument");
}

TEST_CASE("bench on real points samples by ratio") {
  GenSpec spec;
  spec.n = 1000;
  BenchConfig cfg;
  cfg.points = generate(spec);
  cfg.dataset_name = "sample";
  cfg.ratios = {0.2, 1.0};
  const auto rows = run_bench(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 200);
  CHECK(rows[1].n == 1000);
  CHECK(rows[0].dataset == "sample");
  const auto s1 = sample_points(*cfg.points, 0.3, 5);
  CHECK(s1 == sample_points(*cfg.points, 0.3, 5));
  CHECK(s1.size() == 300);
  CHECK_THROWS_AS(sample_points(*cfg.points, 0.0, 5), Error);
}
