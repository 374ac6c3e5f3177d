#ifndef DISMANTLE_ISOMORPHISM_HPP
#define DISMANTLE_ISOMORPHISM_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dismantle/error.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/graph_core.hpp"

namespace dismantle {

inline constexpr std::size_t kDefaultIsoNodes = 1'000'000;

namespace detail {

struct VertexInvariant {
  bool looped;
  std::size_t degree;
  std::vector<std::size_t> neighbor_degrees;  // sorted

  friend bool operator==(const VertexInvariant&,
                         const VertexInvariant&) = default;
  friend auto operator<=>(const VertexInvariant&,
                          const VertexInvariant&) = default;
};

template <class V>
std::vector<VertexInvariant> vertex_invariants(const Graph<V>& g) {
  std::vector<VertexInvariant> inv(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    inv[i].looped = g.looped_at(i);
    inv[i].degree = g.degree_at(i);
    const Bits& r = g.row(i);
    for (auto j = r.find_first(); j != Bits::npos; j = r.find_next(j))
      inv[i].neighbor_degrees.push_back(g.degree_at(j));
    std::sort(inv[i].neighbor_degrees.begin(), inv[i].neighbor_degrees.end());
  }
  return inv;
}

}  // namespace detail

/// A loop- and adjacency-preserving bijection V(G) -> V(H) as (x, image)
/// pairs in vertex order of G, or nothing.  Backtracking with invariant
/// pruning; throws ResourceError past `max_nodes` search nodes.
template <class V, class W>
std::optional<std::vector<std::pair<V, W>>> are_isomorphic(
    const Graph<V>& g, const Graph<W>& h,
    std::size_t max_nodes = kDefaultIsoNodes) {
  const std::size_t n = g.size();
  if (n != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto ig = detail::vertex_invariants(g);
  auto ih = detail::vertex_invariants(h);
  {
    auto sg = ig, sh = ih;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }

  // Search order: start at a vertex with the rarest invariant, then always
  // take the vertex with most already-placed neighbours.
  std::vector<std::size_t> order;
  {
    std::vector<std::size_t> rarity(n);
    for (std::size_t i = 0; i < n; ++i)
      rarity[i] = static_cast<std::size_t>(
          std::count(ig.begin(), ig.end(), ig[i]));
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (placed[i]) continue;
        if (best == n || links[i] > links[best] ||
            (links[i] == links[best] && rarity[i] < rarity[best]))
          best = i;
      }
      placed[best] = true;
      order.push_back(best);
      const Bits& r = g.row(best);
      for (auto j = r.find_first(); j != Bits::npos; j = r.find_next(j))
        ++links[j];
    }
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;

  auto consistent = [&](std::size_t depth, std::size_t w) {
    const std::size_t v = order[depth];
    if (!(ig[v] == ih[w])) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t u = order[k];
      if (g.adjacent_at(u, v) != h.adjacent_at(image[u], w)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || !consistent(depth, w)) continue;
      if (++nodes > max_nodes)
        throw ResourceError("graph isomorphism search", max_nodes);
      image[order[depth]] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  std::vector<std::pair<V, W>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(g.vertex(i), h.vertex(image[i]));
  return out;
}

/// Same d-homotopy type: the stiff cores are isomorphic.  Deleting or adding
/// dominated vertices never changes the core up to isomorphism, so the core
/// class is a complete invariant.
template <class V, class W>
bool same_d_homotopy_type(const Graph<V>& g, const Graph<W>& h,
                          std::size_t max_nodes = kDefaultIsoNodes) {
  auto cg = dismantle_core(g).residual;
  auto ch = dismantle_core(h).residual;
  return are_isomorphic(cg, ch, max_nodes).has_value();
}

}  // namespace dismantle

#endif  // DISMANTLE_ISOMORPHISM_HPP
