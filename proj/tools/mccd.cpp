// mccd: command-line front end for co-located community detection.
//
// Exit codes: 0 success, 1 input or usage error, 2 time budget exceeded,
// 3 validation mismatch.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcc/baseline.hpp"
#include "mcc/bench.hpp"
#include "mcc/datagen.hpp"
#include "mcc/error.hpp"
#include "mcc/framework.hpp"
#include "mcc/gsc.hpp"
#include "mcc/io.hpp"

namespace {

using namespace mcc;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitMismatch = 3;

struct InputOpts {
  std::string locations;
  std::string checkins;
  std::string policy = "latest";
  std::string edges;
};

struct RunOpts {
  double d = 0.0;
  int k = 1;
  std::string social = "core";
  std::string algo = "exact-r12";
  unsigned threads = 1;
  double timeout_s = 0.0;  // 0 disables the budget
  bool precluster = false;
  std::uint64_t max_cliques = CliqueOptions{}.max_cliques;
  std::string out;
};

void add_input(CLI::App* cmd, InputOpts& in, bool with_edges) {
  auto* loc = cmd->add_option("--locations", in.locations,
                              "TSV of id<TAB>x<TAB>y");
  auto* chk = cmd->add_option("--checkins", in.checkins,
                              "SNAP check-ins: user, time, lat, lon, location");
  loc->excludes(chk);
  cmd->add_option("--checkin-policy", in.policy, "latest | mean")
      ->check(CLI::IsMember({"latest", "mean"}));
  if (with_edges) cmd->add_option("--edges", in.edges, "TSV of u<TAB>v");
}

void add_run(CLI::App* cmd, RunOpts& run, bool social) {
  cmd->add_option("--d", run.d, "distance threshold")->required();
  cmd->add_option("--k", run.k, "social parameter / cluster size floor");
  if (social)
    cmd->add_option("--social", run.social, "core | truss")
        ->check(CLI::IsMember({"core", "truss"}));
  cmd->add_option("--algo", run.algo,
                  "exact | exact-r1 | exact-r12 | approx | clique");
  cmd->add_option("--threads", run.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--timeout-s", run.timeout_s,
                  "wall-clock budget in seconds (0 = none)");
  cmd->add_option("--max-cliques", run.max_cliques,
                  "maximal clique budget for --algo clique");
  cmd->add_option("--out", run.out, "output file (default stdout)");
}

std::vector<GeoPoint> read_points(const InputOpts& in) {
  if (!in.locations.empty()) return load_locations(in.locations);
  if (!in.checkins.empty())
    return load_checkins(in.checkins, parse_checkin_policy(in.policy));
  throw Error(ErrorCode::invalid_argument,
              "one of --locations or --checkins is required");
}

GeoSocialNetwork read_network(const InputOpts& in) {
  auto points = read_points(in);
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (!in.edges.empty()) edges = load_edges(in.edges);
  return build_network(std::move(points), edges);
}

DetectionConfig make_config(const RunOpts& run) {
  DetectionConfig cfg;
  cfg.params = Params::make(run.d, run.k, parse_social_kind(run.social));
  cfg.spatial_algo = parse_spatial_algo(run.algo);
  cfg.precluster_by_core = run.precluster;
  cfg.clique.max_cliques = run.max_cliques;
  return cfg;
}

// Owns the optional deadline referenced by RunOptions.
struct Budget {
  std::optional<Deadline> deadline;
  RunOptions opts;

  explicit Budget(const RunOpts& run) {
    opts.threads = run.threads;
    if (run.timeout_s > 0.0) {
      deadline.emplace(std::chrono::duration<double>(run.timeout_s));
      opts.deadline = &*deadline;
    }
  }
};

template <typename WriteFn>
void emit(const std::string& path, WriteFn&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  write(out);
  out.flush();
  if (!out) throw Error(ErrorCode::io_error, "write failed for '" + path + "'");
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream cell(item);
    T value{};
    if (!(cell >> value) || !cell.eof())
      throw Error(ErrorCode::invalid_argument, "bad list item '" + item + "'");
    out.push_back(value);
  }
  if (out.empty())
    throw Error(ErrorCode::invalid_argument, "empty list '" + text + "'");
  return out;
}

int cmd_gen(const GenSpec& spec, const std::string& out,
            const std::string& edges_out, const SocialGenSpec& social) {
  const auto points = generate(spec);
  emit(out, [&](std::ostream& os) { write_locations(os, points); });
  if (!edges_out.empty()) {
    const auto edges = generate_social_edges(points, social);
    emit(edges_out, [&](std::ostream& os) {
      os << "# synthetic friendships: " << social.nearest
         << " nearest neighbours plus random long-range links (p="
         << social.long_range_prob << ", seed=" << social.seed << ")\n";
      for (const auto& [u, v] : edges) os << u << '\t' << v << '\n';
    });
  }
  return kExitOk;
}

int cmd_spatial(const InputOpts& in, const RunOpts& run) {
  const auto points = read_points(in);
  auto cfg = make_config(run);
  Budget budget(run);
  DetectionStats stats;
  const auto clusters = spatial_clusters(points, cfg, budget.opts, &stats);
  emit(run.out, [&](std::ostream& os) {
    write_clusters(os, clusters, points, {run.algo, run.d});
  });
  std::cerr << "clusters=" << clusters.size()
            << " comparisons=" << stats.comparisons << '\n';
  return kExitOk;
}

int cmd_detect(const InputOpts& in, const RunOpts& run,
               std::optional<VertexId> query) {
  const auto net = read_network(in);
  const auto cfg = make_config(run);
  Budget budget(run);
  DetectionStats stats;
  const auto found = query ? search_mccs(net, *query, cfg, budget.opts)
                           : detect_mccs(net, cfg, budget.opts, &stats);
  emit(run.out, [&](std::ostream& os) {
    write_communities(os, found, net, {run.algo, run.d});
  });
  std::cerr << "communities=" << found.size();
  if (!query)
    std::cerr << " spatial_clusters=" << stats.spatial_clusters
              << " comparisons=" << stats.comparisons;
  std::cerr << " provenance=" << to_string(provenance_of(cfg.spatial_algo))
            << '\n';
  return kExitOk;
}

struct BenchOpts {
  std::string algos = "exact-r12";
  std::string ns = "1000";
  std::string densities = "0.008";
  std::string ds = "30";
  std::string ks = "1";
  std::string ratios = "1";
  std::string distribution = "uniform";
  std::string dataset;
  std::uint64_t seed = 1;
  double timeout_s = 8000.0;
  unsigned threads = 1;
  std::uint64_t max_cliques = CliqueOptions{}.max_cliques;
  std::string out;
};

int cmd_bench(const InputOpts& in, const BenchOpts& b) {
  BenchConfig cfg;
  cfg.algos.clear();
  for (const auto& label : parse_list<std::string>(b.algos))
    cfg.algos.push_back(parse_spatial_algo(label));
  cfg.ds = parse_list<double>(b.ds);
  cfg.ks = parse_list<int>(b.ks);
  cfg.seed = b.seed;
  cfg.timeout_s = b.timeout_s;
  cfg.threads = b.threads;
  cfg.clique.max_cliques = b.max_cliques;
  cfg.distribution = parse_distribution(b.distribution);
  if (!in.locations.empty() || !in.checkins.empty()) {
    cfg.points = read_points(in);
    cfg.ratios = parse_list<double>(b.ratios);
    cfg.dataset_name = !b.dataset.empty() ? b.dataset
                       : !in.locations.empty()
                           ? std::filesystem::path(in.locations).stem().string()
                           : std::filesystem::path(in.checkins).stem().string();
  } else {
    cfg.ns = parse_list<std::size_t>(b.ns);
    cfg.densities = parse_list<double>(b.densities);
  }
  const auto rows = run_bench(cfg);
  emit(b.out, [&](std::ostream& os) { write_bench_csv(os, rows); });
  return kExitOk;
}

int cmd_validate(const InputOpts& in, double d, int k, std::size_t limit) {
  const auto points = read_points(in);
  if (points.size() > limit)
    throw Error(ErrorCode::invalid_argument,
                "validate is limited to " + std::to_string(limit) +
                    " points (got " + std::to_string(points.size()) + ")");
  const auto params = Params::make(d, k);
  bool ok = true;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << '\n';
    ok = ok && pass;
  };

  auto sized = [&](std::vector<std::vector<VertexId>> sets) {
    std::erase_if(sets, [&](const auto& s) {
      return s.size() < static_cast<std::size_t>(params.k);
    });
    return sets;
  };
  const auto want_gsc = sized(member_sets(oracle_gsc(points, d)));
  for (auto level : {PruneLevel::none, PruneLevel::rule1, PruneLevel::rule1_2}) {
    const auto got = global_spatial_clusters(points, d, params.k, level);
    report("exact clusters (" + std::string(to_string(level)) +
               ") match oracle",
           member_sets(got.clusters) == want_gsc);
  }
  DetectionConfig approx;
  approx.params = params;
  approx.spatial_algo = SpatialAlgo::approx;
  const auto gasc = member_sets(spatial_clusters(points, approx));
  report("approximate clusters match oracle",
         gasc == sized(member_sets(oracle_gasc(points, d))));

  const auto wide = member_sets(oracle_gsc(points, std::sqrt(2.0) * d));
  bool upper = true, lower = true;
  for (const auto& a : gasc) {
    upper = upper && std::any_of(wide.begin(), wide.end(), [&](const auto& w) {
              return is_subset(a, w);
            });
  }
  for (const auto& g : want_gsc) {
    lower = lower && std::any_of(gasc.begin(), gasc.end(), [&](const auto& a) {
              return is_subset(g, a);
            });
  }
  report("exact clusters lie inside approximate clusters", lower);
  report("approximate clusters lie inside sqrt2-scaled exact clusters", upper);
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect maximal co-located communities in geo-social networks"};
  app.require_subcommand(1);

  GenSpec gen_spec;
  SocialGenSpec gen_social;
  std::string gen_dist = "uniform", gen_out, gen_edges;
  auto* gen = app.add_subcommand("gen", "generate a synthetic point cloud");
  gen->add_option("--n", gen_spec.n, "point count")->required();
  gen->add_option("--density", gen_spec.density, "points per unit area");
  gen->add_option("--distribution", gen_dist, "uniform | gaussian")
      ->check(CLI::IsMember({"uniform", "gaussian"}));
  gen->add_option("--centers", gen_spec.n_centers, "gaussian mixture size");
  gen->add_option("--seed", gen_spec.seed, "random seed");
  gen->add_option("--out", gen_out, "locations TSV (default stdout)");
  gen->add_option("--edges-out", gen_edges,
                  "also write synthetic friendship edges here");
  gen->add_option("--nearest", gen_social.nearest,
                  "friend links per vertex to nearest neighbours");
  gen->add_option("--long-range", gen_social.long_range_prob,
                  "chance of one random long-range link per vertex");

  InputOpts sp_in;
  RunOpts sp_run;
  auto* spatial = app.add_subcommand("spatial", "spatial clusters only");
  add_input(spatial, sp_in, false);
  add_run(spatial, sp_run, false);

  InputOpts det_in;
  RunOpts det_run;
  auto* detect = app.add_subcommand("detect", "detect all communities");
  add_input(detect, det_in, true);
  add_run(detect, det_run, true);
  detect->add_flag("--precluster", det_run.precluster,
                   "split by global k-core/k-truss components first");

  InputOpts se_in;
  RunOpts se_run;
  VertexId query = 0;
  auto* search = app.add_subcommand("search", "communities containing a user");
  add_input(search, se_in, true);
  add_run(search, se_run, true);
  search->add_option("--query", query, "query user id")->required();

  InputOpts be_in;
  BenchOpts be;
  auto* bench = app.add_subcommand("bench", "benchmark the spatial stage");
  add_input(bench, be_in, false);
  bench->add_option("--algos", be.algos, "comma-separated algorithm labels");
  bench->add_option("--n", be.ns, "comma-separated point counts");
  bench->add_option("--density", be.densities, "comma-separated densities");
  bench->add_option("--d", be.ds, "comma-separated thresholds");
  bench->add_option("--k", be.ks, "comma-separated size floors");
  bench->add_option("--ratio", be.ratios,
                    "comma-separated sampling ratios (with input data)");
  bench->add_option("--distribution", be.distribution, "uniform | gaussian")
      ->check(CLI::IsMember({"uniform", "gaussian"}));
  bench->add_option("--dataset", be.dataset, "dataset label for input data");
  bench->add_option("--seed", be.seed, "random seed");
  bench->add_option("--timeout-s", be.timeout_s, "per-cell budget in seconds");
  bench->add_option("--threads", be.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  bench->add_option("--max-cliques", be.max_cliques, "maximal clique budget");
  bench->add_option("--out", be.out, "CSV output (default stdout)");

  InputOpts va_in;
  double va_d = 0.0;
  int va_k = 1;
  std::size_t va_limit = 400;
  auto* validate = app.add_subcommand(
      "validate", "cross-check the fast paths against brute force");
  add_input(validate, va_in, false);
  validate->add_option("--d", va_d, "distance threshold")->required();
  validate->add_option("--k", va_k, "cluster size floor");
  validate->add_option("--limit", va_limit, "maximum point count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      gen_spec.distribution = parse_distribution(gen_dist);
      gen_social.seed = gen_spec.seed;
      return cmd_gen(gen_spec, gen_out, gen_edges, gen_social);
    }
    if (*spatial) return cmd_spatial(sp_in, sp_run);
    if (*detect) return cmd_detect(det_in, det_run, std::nullopt);
    if (*search) return cmd_detect(se_in, se_run, query);
    if (*bench) return cmd_bench(be_in, be);
    if (*validate) return cmd_validate(va_in, va_d, va_k, va_limit);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::timeout ? kExitTimeout : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
