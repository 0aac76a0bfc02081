#include "mcc/social.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mcc/error.hpp"

namespace mcc {
namespace {

// Components of the graph restricted to `alive` vertices, each as sorted ids.
std::vector<std::vector<VertexId>> components(
    const SocialGraph& g, const std::vector<bool>& alive,
    const std::vector<std::vector<std::uint32_t>>& adj) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.size(), false);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    if (!alive[s] || seen[s]) continue;
    std::vector<VertexId> comp;
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      stack.pop_back();
      comp.push_back(g.ids[u]);
      for (std::uint32_t w : adj[u]) {
        if (alive[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Community> wrap(std::vector<std::vector<VertexId>> sets, int k,
                            SocialKind kind) {
  std::vector<Community> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Community{std::move(s), k, kind, {}});
  return out;
}

}  // namespace

InducedSubgraph induced_subgraph(const GeoSocialNetwork& g,
                                 std::span<const VertexId> vertices) {
  std::vector<std::uint32_t> local;
  local.reserve(vertices.size());
  for (VertexId id : vertices) {
    auto idx = g.index_of(id);
    if (!idx)
      throw Error(ErrorCode::unknown_vertex,
                  "unknown vertex " + std::to_string(id));
    local.push_back(*idx);
  }
  // Order by id so the induced graph is canonical.
  std::sort(local.begin(), local.end(), [&](std::uint32_t a, std::uint32_t b) {
    return g.graph().ids[a] < g.graph().ids[b];
  });
  local.erase(std::unique(local.begin(), local.end()), local.end());

  const SocialGraph& parent = g.graph();
  std::vector<std::int64_t> to_local(parent.size(), -1);
  for (std::uint32_t i = 0; i < local.size(); ++i) to_local[local[i]] = i;

  InducedSubgraph sub;
  sub.ids.reserve(local.size());
  sub.adj.resize(local.size());
  for (std::uint32_t i = 0; i < local.size(); ++i) {
    sub.ids.push_back(parent.ids[local[i]]);
    for (std::uint32_t w : parent.adj[local[i]]) {
      if (to_local[w] >= 0) sub.adj[i].push_back(static_cast<std::uint32_t>(to_local[w]));
    }
    std::sort(sub.adj[i].begin(), sub.adj[i].end());
  }
  return sub;
}

InducedSubgraph induced_subgraph(const SocialGraph& g,
                                 std::span<const std::uint32_t> local) {
  InducedSubgraph sub;
  sub.ids.reserve(local.size());
  sub.adj.resize(local.size());
  for (std::uint32_t i = 0; i < local.size(); ++i) {
    sub.ids.push_back(g.ids[local[i]]);
    // Both lists are sorted: merge to find surviving neighbours.
    const auto& nb = g.adj[local[i]];
    std::size_t a = 0, b = 0;
    while (a < nb.size() && b < local.size()) {
      if (nb[a] < local[b]) {
        ++a;
      } else if (local[b] < nb[a]) {
        ++b;
      } else {
        sub.adj[i].push_back(static_cast<std::uint32_t>(b));
        ++a;
        ++b;
      }
    }
  }
  return sub;
}

std::vector<int> core_numbers(const SocialGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> deg(n);
  int max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(g.adj[v].size());
    max_deg = std::max(max_deg, deg[v]);
  }

  // Batagelj-Zaversnik: vertices kept sorted by current degree in `vert`,
  // with bin[d] = first position of degree d.
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (int d : deg) ++bin[d];
  std::size_t start = 0;
  for (int d = 0; d <= max_deg; ++d) {
    const std::size_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<std::uint32_t> vert(n);
  std::vector<std::size_t> pos(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (int d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
  if (max_deg >= 0 && !bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = vert[i];
    for (std::uint32_t u : g.adj[v]) {
      if (deg[u] > deg[v]) {
        const int du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const std::uint32_t w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

std::vector<Community> k_core_communities(const SocialGraph& g, int k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "core k must be >= 1");
  const auto core = core_numbers(g);
  std::vector<bool> alive(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) alive[v] = core[v] >= k;
  // Isolated vertices have core 0 and never survive for k >= 1.
  return wrap(components(g, alive, g.adj), k, SocialKind::core);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list(
    const SocialGraph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    for (std::uint32_t v : g.adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::vector<bool> k_truss_edges(const SocialGraph& g, int k) {
  if (k < 2) throw Error(ErrorCode::invalid_argument, "truss k must be >= 2");
  const auto edges = edge_list(g);
  const std::size_t m = edges.size();
  std::vector<bool> alive(m, true);
  if (k <= 2) return alive;

  // Edge id lookup per vertex, parallel to adj.
  std::vector<std::vector<std::uint32_t>> eid(g.size());
  for (std::uint32_t u = 0; u < g.size(); ++u) eid[u].resize(g.adj[u].size());
  for (std::uint32_t e = 0; e < m; ++e) {
    const auto [u, v] = edges[e];
    auto iu = std::lower_bound(g.adj[u].begin(), g.adj[u].end(), v);
    auto iv = std::lower_bound(g.adj[v].begin(), g.adj[v].end(), u);
    eid[u][iu - g.adj[u].begin()] = e;
    eid[v][iv - g.adj[v].begin()] = e;
  }

  // Visits every live triangle (u, v, w) through edge e, passing the ids of
  // the two other edges.
  auto for_each_triangle = [&](std::uint32_t e, auto&& fn) {
    const auto [u, v] = edges[e];
    const auto& nu = g.adj[u];
    const auto& nv = g.adj[v];
    std::size_t a = 0, b = 0;
    while (a < nu.size() && b < nv.size()) {
      if (nu[a] < nv[b]) {
        ++a;
      } else if (nv[b] < nu[a]) {
        ++b;
      } else {
        const std::uint32_t e1 = eid[u][a];
        const std::uint32_t e2 = eid[v][b];
        if (alive[e1] && alive[e2]) fn(e1, e2);
        ++a;
        ++b;
      }
    }
  };

  std::vector<int> support(m, 0);
  for (std::uint32_t e = 0; e < m; ++e)
    for_each_triangle(e, [&](std::uint32_t, std::uint32_t) { ++support[e]; });

  const int need = k - 2;
  std::vector<std::uint32_t> queue;
  std::vector<bool> queued(m, false);
  for (std::uint32_t e = 0; e < m; ++e) {
    if (support[e] < need) {
      queue.push_back(e);
      queued[e] = true;
    }
  }
  while (!queue.empty()) {
    const std::uint32_t e = queue.back();
    queue.pop_back();
    for_each_triangle(e, [&](std::uint32_t e1, std::uint32_t e2) {
      for (std::uint32_t f : {e1, e2}) {
        if (--support[f] < need && !queued[f]) {
          queued[f] = true;
          queue.push_back(f);
        }
      }
    });
    alive[e] = false;
  }
  return alive;
}

std::vector<Community> k_truss_communities(const SocialGraph& g, int k) {
  const auto edges = edge_list(g);
  const auto alive_edges = k_truss_edges(g, k);
  std::vector<std::vector<std::uint32_t>> adj(g.size());
  std::vector<bool> alive(g.size(), false);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!alive_edges[e]) continue;
    const auto [u, v] = edges[e];
    adj[u].push_back(v);
    adj[v].push_back(u);
    alive[u] = alive[v] = true;
  }
  return wrap(components(g, alive, adj), k, SocialKind::truss);
}

std::vector<Community> communities(const SocialGraph& g, int k,
                                   SocialKind kind) {
  return kind == SocialKind::core ? k_core_communities(g, k)
                                  : k_truss_communities(g, k);
}

}  // namespace mcc
