#pragma once

// Synthetic point clouds with controlled size and density.
//
// Randomness comes from std::mt19937_64 (its output sequence is fixed by the
// C++ standard). Doubles are drawn as (x >> 11) * 2^-53 and normals by the
// Box-Muller transform, so outputs do not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mcc/model.hpp"

namespace mcc {

enum class Distribution { uniform, gaussian };

std::string_view to_string(Distribution dist);
Distribution parse_distribution(std::string_view text);

struct GenSpec {
  std::size_t n = 1000;
  double density = 0.008;  // points per unit area
  Distribution distribution = Distribution::uniform;
  int n_centers = 10;      // gaussian only
  std::uint64_t seed = 1;
};

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n) {  // [0, n)
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
  }
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Side length of the square region holding `spec.n` points at the density.
double region_side(const GenSpec& spec);

// Throws invalid_spec.
std::vector<GeoPoint> generate(const GenSpec& spec);

struct SocialGenSpec {
  int nearest = 4;              // links to this many nearest neighbours
  double long_range_prob = 0.1; // chance of one extra uniformly random link
  std::uint64_t seed = 1;
};

// Seed-deterministic friendship edges for synthetic runs.
std::vector<std::pair<VertexId, VertexId>> generate_social_edges(
    std::span<const GeoPoint> points, const SocialGenSpec& spec);

// Max and average neighbour count within `radius` (excluding the point).
struct LocalityStats {
  double max_neighbors = 0.0;
  double avg_neighbors = 0.0;
  double locality() const {
    return avg_neighbors > 0.0 ? max_neighbors / avg_neighbors : 0.0;
  }
};

LocalityStats locality(std::span<const GeoPoint> points, double radius);

}  // namespace mcc
