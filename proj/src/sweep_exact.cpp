#include "mcc/sweep_exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mcc/error.hpp"

namespace mcc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Event {
  double start;
  double end;
  VertexId node;
};

// Drops duplicates and sets contained in another set. Families here are
// small (one reference point), so the quadratic filter is fine.
std::vector<std::vector<VertexId>> keep_maximal(
    std::vector<std::vector<VertexId>> sets) {
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<VertexId>> kept;
  for (auto& s : sets) {
    bool contained = false;
    for (const auto& big : kept) {
      if (big.size() > s.size() && is_subset(s, big)) {
        contained = true;
        break;
      }
    }
    if (!contained) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

AngularInterval angular_interval(const GeoPoint& v, const GeoPoint& u,
                                 double r, double eps) {
  const double dx = u.x - v.x;
  const double dy = u.y - v.y;
  const double dist = planar_norm(dx, dy);
  if (dist > 2.0 * r + eps)
    throw Error(ErrorCode::too_far,
                "vertex " + std::to_string(u.id) + " is farther than 2r from " +
                    std::to_string(v.id));
  AngularInterval out;
  out.node = u.id;
  if (dist <= eps) {
    out.full_circle = true;
    out.start = -kPi;
    out.end = kPi;
    return out;
  }
  const double alpha = std::atan2(dy, dx);
  const double half = std::acos(std::clamp(dist / (2.0 * r), 0.0, 1.0));
  out.start = alpha - half;
  out.end = alpha + half;
  return out;
}

GeoPoint bounded_circle_center(const GeoPoint& v, double r, double theta) {
  return GeoPoint{v.id, v.x + r * std::cos(theta), v.y + r * std::sin(theta)};
}

std::vector<SpatialCluster> local_spatial_clusters(
    const GeoPoint& v, std::span<const GeoPoint> candidates, double r,
    double eps) {
  std::vector<VertexId> coincident;
  std::vector<Event> events;
  events.reserve(2 * candidates.size());

  for (const auto& u : candidates) {
    const AngularInterval iv = angular_interval(v, u, r, eps);
    if (iv.full_circle) {
      coincident.push_back(u.id);
      continue;
    }
    double s = iv.start;
    double e = iv.end;
    // Normalize start into [-pi, pi); the +2pi copy then covers windows that
    // wrap past +pi.
    while (s < -kPi) {
      s += kTwoPi;
      e += kTwoPi;
    }
    while (s >= kPi) {
      s -= kTwoPi;
      e -= kTwoPi;
    }
    events.push_back({s, e, u.id});
    events.push_back({s + kTwoPi, e + kTwoPi, u.id});
  }

  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.end != b.end) return a.end < b.end;
    return a.node < b.node;
  });

  std::vector<std::vector<VertexId>> emitted;
  auto emit = [&](const std::vector<const Event*>& active) {
    std::vector<VertexId> members;
    members.reserve(active.size() + coincident.size() + 1);
    members.push_back(v.id);
    for (const Event* ev : active) members.push_back(ev->node);
    members.insert(members.end(), coincident.begin(), coincident.end());
    canonicalize(members);
    emitted.push_back(std::move(members));
  };

  // Active set = windows containing the current sweep angle. It is emitted
  // whenever it is about to shrink after having grown, i.e. at each local
  // maximum of the stabbing set.
  std::vector<const Event*> active;
  bool grown = false;
  for (const Event& ev : events) {
    const bool shrinks = std::any_of(active.begin(), active.end(),
                                     [&](const Event* a) {
                                       return a->end < ev.start;
                                     });
    if (shrinks) {
      if (grown) emit(active);
      grown = false;
      std::erase_if(active, [&](const Event* a) { return a->end < ev.start; });
    }
    active.push_back(&ev);
    grown = true;
  }
  if (grown || emitted.empty()) emit(active);

  std::vector<SpatialCluster> out;
  for (auto& members : keep_maximal(std::move(emitted))) {
    SpatialCluster c;
    c.members = std::move(members);
    c.reference = v.id;
    c.kind = ClusterKind::exact_circle;
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<double> covering_angle(const GeoPoint& v,
                                     std::span<const GeoPoint> members,
                                     double r, double eps) {
  std::vector<double> angles{0.0};
  for (const auto& u : members) {
    if (planar_norm(u.x - v.x, u.y - v.y) > 2.0 * r + eps) return std::nullopt;
    const AngularInterval iv = angular_interval(v, u, r, eps);
    if (iv.full_circle) continue;
    angles.push_back(iv.start);
    angles.push_back(iv.end);
  }
  for (double theta : angles) {
    const GeoPoint c = bounded_circle_center(v, r, theta);
    const bool all_inside =
        std::all_of(members.begin(), members.end(), [&](const GeoPoint& u) {
          return planar_norm(u.x - c.x, u.y - c.y) <= r + eps;
        });
    if (all_inside) return theta;
  }
  return std::nullopt;
}

}  // namespace mcc
