#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcc/model.hpp"

namespace mcc {

// `id<TAB>x<TAB>y` per line; blank lines and lines starting with '#' are
// skipped. Throws parse_error (with line) and duplicate_id.
std::vector<GeoPoint> parse_locations(std::istream& in);
std::vector<GeoPoint> load_locations(const std::string& path);

// 17 significant digits, so load_locations reproduces the coordinates bitwise.
void write_locations(std::ostream& out, std::span<const GeoPoint> points);
void write_locations(const std::string& path, std::span<const GeoPoint> points);

enum class CheckinPolicy { latest, mean };

std::string_view to_string(CheckinPolicy policy);
CheckinPolicy parse_checkin_policy(std::string_view text);

constexpr double kEarthRadiusMeters = 6371000.0;

struct LatLon {
  double lat = 0.0;  // degrees
  double lon = 0.0;
};

// Equirectangular projection about `origin`, in meters.
std::pair<double, double> project(const LatLon& p, const LatLon& origin);

// SNAP check-ins: `user<TAB>time<TAB>lat<TAB>lon<TAB>location`. One point per
// user, projected about the centroid of the per-user positions. Timestamps
// are compared as strings (ISO-8601 sorts chronologically).
std::vector<GeoPoint> parse_checkins(std::istream& in, CheckinPolicy policy);
std::vector<GeoPoint> load_checkins(const std::string& path,
                                    CheckinPolicy policy);

// `u<TAB>v` per line. Self-loops are kept here.
std::vector<std::pair<VertexId, VertexId>> parse_edges(std::istream& in);
std::vector<std::pair<VertexId, VertexId>> load_edges(const std::string& path);
void write_edges(const std::string& path,
                 std::span<const std::pair<VertexId, VertexId>> edges);

struct OutputMeta {
  std::string algo;
  double d = 0.0;
};

// JSON lines sorted by member list; each line carries the diameter and
// minimum enclosing circle radius recomputed from `points`.
void write_communities(std::ostream& out, std::span<const Community> found,
                       const GeoSocialNetwork& g, const OutputMeta& meta);
void write_communities(const std::string& path,
                       std::span<const Community> found,
                       const GeoSocialNetwork& g, const OutputMeta& meta);

void write_clusters(std::ostream& out, std::span<const SpatialCluster> found,
                    std::span<const GeoPoint> points, const OutputMeta& meta);

}  // namespace mcc
