#pragma once

// Angular sweep around a reference point v. A v-bounded circle has radius r,
// passes through v, and is parameterized by the polar angle theta of its
// center as seen from v.

#include <optional>
#include <span>
#include <vector>

#include "mcc/model.hpp"

namespace mcc {

// Window of center angles for which the v-bounded circle encloses `node`.
// full_circle marks a point coincident with v (enclosed for every angle).
struct AngularInterval {
  VertexId node = 0;
  double start = 0.0;
  double end = 0.0;
  bool full_circle = false;
};

// start = atan2 - acos(dist / 2r), end = atan2 + acos(dist / 2r).
// Throws too_far when dist > 2r + eps.
AngularInterval angular_interval(const GeoPoint& v, const GeoPoint& u,
                                 double r, double eps = kDefaultEps);

// Center of the v-bounded circle at angle theta.
GeoPoint bounded_circle_center(const GeoPoint& v, double r, double theta);

// All maximal point sets coverable by a v-bounded circle of radius r, over
// candidates ∪ {v}. Candidates must lie within 2r + eps of v and must not
// contain v itself. Every result contains v; results are mutually
// non-containing and sorted by member list.
std::vector<SpatialCluster> local_spatial_clusters(
    const GeoPoint& v, std::span<const GeoPoint> candidates, double r,
    double eps = kDefaultEps);

// An angle whose v-bounded circle encloses all of `members` (with eps slack),
// if one exists. Members may include v.
std::optional<double> covering_angle(const GeoPoint& v,
                                     std::span<const GeoPoint> members,
                                     double r, double eps = kDefaultEps);

}  // namespace mcc
