#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "mcc/model.hpp"

namespace mcc {

struct BoundingBox {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
  bool empty = true;
};

// Uniform grid over a point set. A point lands in cell
// (floor(x / cell_size), floor(y / cell_size)). Queries are closed with eps
// slack and return results sorted ascending. Immutable after build.
class GridIndex {
 public:
  struct Cell {
    std::int64_t cx = 0;
    std::int64_t cy = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  GridIndex() = default;
  GridIndex(std::span<const GeoPoint> points, double cell_size,
            double eps = kDefaultEps);

  double cell_size() const { return cell_size_; }
  double eps() const { return eps_; }
  const BoundingBox& bounds() const { return bounds_; }
  std::size_t size() const { return points_.size(); }
  std::size_t bucket_count() const { return buckets_.size(); }

  Cell cell_of(double x, double y) const;

  // Positions (into the indexed span) of the points in one cell.
  std::vector<std::uint32_t> bucket(Cell cell) const;

  std::vector<VertexId> range_query_disk(const GeoPoint& center,
                                         double radius) const;
  std::vector<VertexId> range_query_rect(double x_lo, double x_hi, double y_lo,
                                         double y_hi) const;

  // Same queries, but returning positions into the indexed span.
  std::vector<std::uint32_t> disk_positions(double cx, double cy,
                                            double radius) const;
  std::vector<std::uint32_t> rect_positions(double x_lo, double x_hi,
                                            double y_lo, double y_hi) const;

 private:
  struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept;
  };
  struct Range {
    std::uint32_t begin = 0;
    std::uint32_t count = 0;
  };

  template <typename Pred>
  std::vector<std::uint32_t> collect(double x_lo, double x_hi, double y_lo,
                                     double y_hi, Pred&& keep) const;

  std::vector<VertexId> to_ids(const std::vector<std::uint32_t>& pos) const;

  double cell_size_ = 1.0;
  double eps_ = kDefaultEps;
  BoundingBox bounds_;
  std::vector<GeoPoint> points_;       // copy of the input, by position
  std::vector<std::uint32_t> order_;   // positions grouped by cell
  std::unordered_map<Cell, Range, CellHash> buckets_;
};

// Convenience wrapper matching the free-function style used elsewhere.
GridIndex build_grid(std::span<const GeoPoint> points, double cell_size,
                     double eps = kDefaultEps);

}  // namespace mcc
