#include "mcc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "mcc/baseline.hpp"
#include "mcc/error.hpp"

namespace mcc {
namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::io_error, "write failed for '" + path + "'");
}

// Splits on tabs; a trailing '\r' is dropped.
std::vector<std::string_view> fields(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::parse_error,
              "line " + std::to_string(line_no) + ": " + msg, line_no);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line_no,
               std::string_view what) {
  T value{};
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc() || res.ptr != end)
    parse_fail(line_no, "bad " + std::string(what) + " '" + std::string(text) +
                            "'");
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value))
      parse_fail(line_no, "non-finite " + std::string(what));
  }
  return value;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<GeoPoint> parse_locations(std::istream& in) {
  std::vector<GeoPoint> out;
  std::unordered_set<VertexId> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto f = fields(line);
    if (f.size() != 3) parse_fail(line_no, "expected 3 tab-separated fields");
    GeoPoint p;
    p.id = parse_number<VertexId>(f[0], line_no, "id");
    p.x = parse_number<double>(f[1], line_no, "x");
    p.y = parse_number<double>(f[2], line_no, "y");
    if (!seen.insert(p.id).second)
      throw Error(ErrorCode::duplicate_id,
                  "line " + std::to_string(line_no) + ": duplicate id " +
                      std::to_string(p.id),
                  line_no);
    out.push_back(p);
  }
  return out;
}

std::vector<GeoPoint> load_locations(const std::string& path) {
  auto in = open_in(path);
  return parse_locations(in);
}

void write_locations(std::ostream& out, std::span<const GeoPoint> points) {
  for (const auto& p : points) {
    out << p.id << '\t' << format_double(p.x) << '\t' << format_double(p.y)
        << '\n';
  }
}

void write_locations(const std::string& path,
                     std::span<const GeoPoint> points) {
  auto out = open_out(path);
  write_locations(out, points);
  finish(out, path);
}

std::string_view to_string(CheckinPolicy policy) {
  return policy == CheckinPolicy::latest ? "latest" : "mean";
}

CheckinPolicy parse_checkin_policy(std::string_view text) {
  if (text == "latest") return CheckinPolicy::latest;
  if (text == "mean") return CheckinPolicy::mean;
  throw Error(ErrorCode::invalid_argument,
              "unknown check-in policy '" + std::string(text) + "'");
}

std::pair<double, double> project(const LatLon& p, const LatLon& origin) {
  constexpr double kRad = std::numbers::pi / 180.0;
  const double x = kEarthRadiusMeters * (p.lon - origin.lon) * kRad *
                   std::cos(origin.lat * kRad);
  const double y = kEarthRadiusMeters * (p.lat - origin.lat) * kRad;
  return {x, y};
}

std::vector<GeoPoint> parse_checkins(std::istream& in, CheckinPolicy policy) {
  struct Acc {
    std::string latest_time;
    LatLon latest;
    double lat_sum = 0.0;
    double lon_sum = 0.0;
    std::size_t count = 0;
  };
  std::map<VertexId, Acc> users;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto f = fields(line);
    if (f.size() < 4) parse_fail(line_no, "expected at least 4 fields");
    const auto user = parse_number<VertexId>(f[0], line_no, "user");
    const LatLon pos{parse_number<double>(f[2], line_no, "latitude"),
                     parse_number<double>(f[3], line_no, "longitude")};
    Acc& acc = users[user];
    if (acc.count == 0 || f[1] > acc.latest_time) {
      acc.latest_time = std::string(f[1]);
      acc.latest = pos;
    }
    acc.lat_sum += pos.lat;
    acc.lon_sum += pos.lon;
    ++acc.count;
  }

  std::vector<std::pair<VertexId, LatLon>> chosen;
  chosen.reserve(users.size());
  LatLon centroid;
  for (const auto& [user, acc] : users) {
    LatLon pos = acc.latest;
    if (policy == CheckinPolicy::mean) {
      const double n = static_cast<double>(acc.count);
      pos = {acc.lat_sum / n, acc.lon_sum / n};
    }
    centroid.lat += pos.lat;
    centroid.lon += pos.lon;
    chosen.emplace_back(user, pos);
  }
  if (!chosen.empty()) {
    centroid.lat /= static_cast<double>(chosen.size());
    centroid.lon /= static_cast<double>(chosen.size());
  }

  std::vector<GeoPoint> out;
  out.reserve(chosen.size());
  for (const auto& [user, pos] : chosen) {
    const auto [x, y] = project(pos, centroid);
    out.push_back({user, x, y});
  }
  return out;
}

std::vector<GeoPoint> load_checkins(const std::string& path,
                                    CheckinPolicy policy) {
  auto in = open_in(path);
  return parse_checkins(in, policy);
}

std::vector<std::pair<VertexId, VertexId>> parse_edges(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto f = fields(line);
    if (f.size() != 2) parse_fail(line_no, "expected 2 tab-separated fields");
    out.emplace_back(parse_number<VertexId>(f[0], line_no, "vertex"),
                     parse_number<VertexId>(f[1], line_no, "vertex"));
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> load_edges(const std::string& path) {
  auto in = open_in(path);
  return parse_edges(in);
}

void write_edges(const std::string& path,
                 std::span<const std::pair<VertexId, VertexId>> edges) {
  auto out = open_out(path);
  for (const auto& [a, b] : edges) out << a << '\t' << b << '\n';
  finish(out, path);
}

void write_communities(std::ostream& out, std::span<const Community> found,
                       const GeoSocialNetwork& g, const OutputMeta& meta) {
  std::vector<const Community*> order;
  for (const auto& c : found) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const Community* a, const Community* b) {
              return a->members < b->members;
            });
  for (const Community* c : order) {
    std::vector<GeoPoint> pts;
    pts.reserve(c->size());
    for (VertexId id : c->members) pts.push_back(g.point(id));
    nlohmann::ordered_json j;
    j["members"] = c->members;
    j["k"] = c->k;
    j["social"] = std::string(to_string(c->social_kind));
    j["algo"] = meta.algo;
    j["d"] = meta.d;
    j["diameter"] = max_pairwise_distance(pts);
    j["mec_radius"] = pts.empty() ? 0.0 : min_enclosing_circle(pts).radius;
    out << j.dump() << '\n';
  }
}

void write_communities(const std::string& path,
                       std::span<const Community> found,
                       const GeoSocialNetwork& g, const OutputMeta& meta) {
  auto out = open_out(path);
  write_communities(out, found, g, meta);
  finish(out, path);
}

void write_clusters(std::ostream& out, std::span<const SpatialCluster> found,
                    std::span<const GeoPoint> points, const OutputMeta& meta) {
  std::unordered_map<VertexId, const GeoPoint*> by_id;
  for (const auto& p : points) by_id.emplace(p.id, &p);
  std::vector<const SpatialCluster*> order;
  for (const auto& c : found) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const SpatialCluster* a, const SpatialCluster* b) {
              return a->members < b->members;
            });
  for (const SpatialCluster* c : order) {
    std::vector<GeoPoint> pts;
    pts.reserve(c->size());
    for (VertexId id : c->members) {
      auto it = by_id.find(id);
      if (it == by_id.end())
        throw Error(ErrorCode::unknown_vertex,
                    "cluster member " + std::to_string(id) + " not in input");
      pts.push_back(*it->second);
    }
    nlohmann::ordered_json j;
    j["members"] = c->members;
    j["kind"] = std::string(to_string(c->kind));
    j["algo"] = meta.algo;
    j["d"] = meta.d;
    j["diameter"] = max_pairwise_distance(pts);
    out << j.dump() << '\n';
  }
}

}  // namespace mcc
