#pragma once

// Social constraint engines. A community is one connected component of the
// maximal k-core (or k-truss) of a graph.
//
// Truss convention: the k-truss keeps edges contained in at least k - 2
// triangles, so k = 2 keeps every edge.

#include <cstdint>
#include <span>
#include <vector>

#include "mcc/model.hpp"

namespace mcc {

// Subgraph of g induced by `vertices` (ids). Local order follows ascending id.
// Throws unknown_vertex.
InducedSubgraph induced_subgraph(const GeoSocialNetwork& g,
                                 std::span<const VertexId> vertices);

// Same, by local index into an existing graph. `local` must be sorted.
InducedSubgraph induced_subgraph(const SocialGraph& g,
                                 std::span<const std::uint32_t> local);

// Core number per local index (bucket peeling).
std::vector<int> core_numbers(const SocialGraph& g);

std::vector<Community> k_core_communities(const SocialGraph& g, int k);

// Surviving-edge flags after truss peeling, indexed like `edge_list(g)`.
std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list(
    const SocialGraph& g);
std::vector<bool> k_truss_edges(const SocialGraph& g, int k);

std::vector<Community> k_truss_communities(const SocialGraph& g, int k);

std::vector<Community> communities(const SocialGraph& g, int k,
                                   SocialKind kind);

}  // namespace mcc
