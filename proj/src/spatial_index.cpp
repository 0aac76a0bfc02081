#include "mcc/spatial_index.hpp"

#include <algorithm>
#include <cmath>

#include "mcc/error.hpp"

namespace mcc {

std::size_t GridIndex::CellHash::operator()(const Cell& c) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(c.cx) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(c.cy) + 0x7F4A7C159E3779B9ULL + (h << 6) +
       (h >> 2);
  return static_cast<std::size_t>(h);
}

GridIndex::GridIndex(std::span<const GeoPoint> points, double cell_size,
                     double eps)
    : cell_size_(cell_size), eps_(eps), points_(points.begin(), points.end()) {
  if (!(cell_size > 0.0) || !std::isfinite(cell_size))
    throw Error(ErrorCode::non_positive_cell_size,
                "grid cell size must be positive");

  std::vector<std::pair<Cell, std::uint32_t>> keyed;
  keyed.reserve(points_.size());
  for (std::uint32_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    keyed.emplace_back(cell_of(p.x, p.y), i);
    if (bounds_.empty) {
      bounds_ = {p.x, p.x, p.y, p.y, false};
    } else {
      bounds_.x_lo = std::min(bounds_.x_lo, p.x);
      bounds_.x_hi = std::max(bounds_.x_hi, p.x);
      bounds_.y_lo = std::min(bounds_.y_lo, p.y);
      bounds_.y_hi = std::max(bounds_.y_hi, p.y);
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.cx != b.first.cx) return a.first.cx < b.first.cx;
    if (a.first.cy != b.first.cy) return a.first.cy < b.first.cy;
    return a.second < b.second;
  });

  order_.reserve(keyed.size());
  buckets_.reserve(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || !(keyed[i].first == keyed[i - 1].first))
      buckets_[keyed[i].first] = Range{static_cast<std::uint32_t>(i), 0};
    ++buckets_[keyed[i].first].count;
    order_.push_back(keyed[i].second);
  }
}

GridIndex::Cell GridIndex::cell_of(double x, double y) const {
  return Cell{static_cast<std::int64_t>(std::floor(x / cell_size_)),
              static_cast<std::int64_t>(std::floor(y / cell_size_))};
}

std::vector<std::uint32_t> GridIndex::bucket(Cell cell) const {
  auto it = buckets_.find(cell);
  if (it == buckets_.end()) return {};
  std::vector<std::uint32_t> out(order_.begin() + it->second.begin,
                                 order_.begin() + it->second.begin +
                                     it->second.count);
  return out;
}

template <typename Pred>
std::vector<std::uint32_t> GridIndex::collect(double x_lo, double x_hi,
                                              double y_lo, double y_hi,
                                              Pred&& keep) const {
  std::vector<std::uint32_t> out;
  if (points_.empty()) return out;

  const Cell lo = cell_of(x_lo, y_lo);
  const Cell hi = cell_of(x_hi, y_hi);
  const double span_x = static_cast<double>(hi.cx - lo.cx) + 1.0;
  const double span_y = static_cast<double>(hi.cy - lo.cy) + 1.0;

  auto scan = [&](const Range& r) {
    for (std::uint32_t i = r.begin; i < r.begin + r.count; ++i) {
      const std::uint32_t pos = order_[i];
      if (keep(points_[pos])) out.push_back(pos);
    }
  };

  if (span_x * span_y > static_cast<double>(buckets_.size())) {
    // Query window larger than the occupied grid: walk buckets instead.
    for (const auto& [cell, range] : buckets_) {
      if (cell.cx < lo.cx || cell.cx > hi.cx || cell.cy < lo.cy ||
          cell.cy > hi.cy)
        continue;
      scan(range);
    }
  } else {
    for (std::int64_t cx = lo.cx; cx <= hi.cx; ++cx) {
      for (std::int64_t cy = lo.cy; cy <= hi.cy; ++cy) {
        auto it = buckets_.find(Cell{cx, cy});
        if (it != buckets_.end()) scan(it->second);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> GridIndex::disk_positions(double cx, double cy,
                                                     double radius) const {
  const double reach = radius + eps_;
  return collect(cx - reach, cx + reach, cy - reach, cy + reach,
                 [&](const GeoPoint& p) {
                   return planar_norm(p.x - cx, p.y - cy) <= reach;
                 });
}

std::vector<std::uint32_t> GridIndex::rect_positions(double x_lo, double x_hi,
                                                     double y_lo,
                                                     double y_hi) const {
  if (x_lo > x_hi || y_lo > y_hi)
    throw Error(ErrorCode::empty_range, "rectangle bounds are inverted");
  const double xl = x_lo - eps_, xh = x_hi + eps_;
  const double yl = y_lo - eps_, yh = y_hi + eps_;
  return collect(xl, xh, yl, yh, [&](const GeoPoint& p) {
    return p.x >= xl && p.x <= xh && p.y >= yl && p.y <= yh;
  });
}

std::vector<VertexId> GridIndex::to_ids(
    const std::vector<std::uint32_t>& pos) const {
  std::vector<VertexId> ids;
  ids.reserve(pos.size());
  for (auto p : pos) ids.push_back(points_[p].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<VertexId> GridIndex::range_query_disk(const GeoPoint& center,
                                                  double radius) const {
  if (radius < 0.0)
    throw Error(ErrorCode::invalid_argument, "radius must be non-negative");
  return to_ids(disk_positions(center.x, center.y, radius));
}

std::vector<VertexId> GridIndex::range_query_rect(double x_lo, double x_hi,
                                                  double y_lo,
                                                  double y_hi) const {
  return to_ids(rect_positions(x_lo, x_hi, y_lo, y_hi));
}

GridIndex build_grid(std::span<const GeoPoint> points, double cell_size,
                     double eps) {
  return GridIndex(points, cell_size, eps);
}

}  // namespace mcc
