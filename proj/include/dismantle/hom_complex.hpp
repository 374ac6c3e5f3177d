#ifndef DISMANTLE_HOM_COMPLEX_HPP
#define DISMANTLE_HOM_COMPLEX_HPP

// The Hom(G, H) cell complex, handled through its face poset.
//
// A cell is an indexing function eta : V(G) -> nonempty subsets of V(H)
// with eta(x) x eta(y) inside E(H) for every edge (x, y) of G.  Cells are
// tied to cliques of hom(G, H) by
//
//   Phi(clique)(x) = { f(x) : f in clique }
//   Psi(eta)       = all selections x |-> y_x in eta(x)
//
// with Phi o Psi = 1 and Psi o Phi >= 1 on cliques.

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "dismantle/certificate.hpp"
#include "dismantle/complex.hpp"
#include "dismantle/error.hpp"
#include "dismantle/functors.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/graph_core.hpp"
#include "dismantle/hom_graph.hpp"
#include "dismantle/poset.hpp"
#include "dismantle/poset_core.hpp"

namespace dismantle {

/// Cell of Hom(G, H): (vertex of G, sorted nonempty value set) pairs in
/// vertex order of G.
template <class V, class W>
struct IndexingFunction {
  std::vector<std::pair<V, std::vector<W>>> assignment;

  const std::vector<W>& operator()(const V& x) const {
    for (const auto& p : assignment)
      if (p.first == x) return p.second;
    fail(ErrorCode::input, "indexing function is not defined on '" +
                               label(x) + "'");
  }

  /// eta <= eta' pointwise.
  bool is_face_of(const IndexingFunction& other) const {
    if (assignment.size() != other.assignment.size()) return false;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      const auto& a = assignment[i].second;
      const auto& b = other.assignment[i].second;
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
    return true;
  }

  /// Cell dimension: the sum of (value count - 1) over the vertices.
  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& p : assignment) d += p.second.size() - 1;
    return d;
  }

  friend bool operator==(const IndexingFunction&,
                         const IndexingFunction&) = default;
  friend auto operator<=>(const IndexingFunction& a,
                          const IndexingFunction& b) {
    return a.assignment <=> b.assignment;
  }
};

/// JSON object {"x": ["a", "b"], ...}.
template <class V, class W>
json label_json(const IndexingFunction<V, W>& eta) {
  json out = json::object();
  for (const auto& [x, ys] : eta.assignment) {
    json vals = json::array();
    for (const auto& y : ys) vals.push_back(label_json(y));
    out[label(x)] = std::move(vals);
  }
  return out;
}

template <class V, class W>
using Clique = Simplex<Morphism<V, W>>;

template <class V, class W>
bool is_indexing_function(const Graph<V>& g, const Graph<W>& h,
                          const IndexingFunction<V, W>& eta) {
  if (eta.assignment.size() != g.size()) return false;
  std::vector<std::vector<std::size_t>> idx(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& [x, ys] = eta.assignment[i];
    if (!(x == g.vertex(i)) || ys.empty()) return false;
    if (!std::is_sorted(ys.begin(), ys.end()) ||
        std::adjacent_find(ys.begin(), ys.end()) != ys.end())
      return false;
    for (const auto& y : ys) {
      auto j = h.find(y);
      if (!j) return false;
      idx[i].push_back(*j);
    }
  }
  for (std::size_t x = 0; x < g.size(); ++x)
    for (auto y = g.row(x).find_first(); y != Bits::npos;
         y = g.row(x).find_next(y))
      for (auto a : idx[x])
        for (auto b : idx[y])
          if (!h.adjacent_at(a, b)) return false;
  return true;
}

/// Phi: pointwise union of the values of a clique of hom(G, H).
template <class V, class W>
IndexingFunction<V, W> phi(const Graph<V>& g, const Graph<W>& h,
                           const std::vector<Morphism<V, W>>& clique) {
  if (clique.empty()) fail(ErrorCode::input, "empty clique");
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i; j < clique.size(); ++j)
      if (!morphisms_adjacent(g, h, clique[i], clique[j]))
        fail(ErrorCode::input, "morphisms " + label(clique[i]) + " and " +
                                   label(clique[j]) + " are not adjacent");
  IndexingFunction<V, W> eta;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<W> vals;
    for (const auto& f : clique) vals.push_back(f.assignment[i].second);
    eta.assignment.emplace_back(g.vertex(i), make_simplex(std::move(vals)));
  }
  return eta;
}

/// Psi: every selection from an indexing function, in lexicographic order.
template <class V, class W>
std::vector<Morphism<V, W>> psi(const Graph<V>& g, const Graph<W>& h,
                                const IndexingFunction<V, W>& eta) {
  if (!is_indexing_function(g, h, eta))
    fail(ErrorCode::input, label(eta) + " is not an indexing function");
  const std::size_t n = g.size();
  std::vector<Morphism<V, W>> out;
  std::vector<std::size_t> pos(n, 0);
  for (;;) {
    Morphism<V, W> f;
    for (std::size_t i = 0; i < n; ++i)
      f.assignment.emplace_back(eta.assignment[i].first,
                                eta.assignment[i].second[pos[i]]);
    out.push_back(std::move(f));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < eta.assignment[i].second.size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

namespace detail {

template <class V, class W>
Poset<IndexingFunction<V, W>> cells_poset(
    std::vector<IndexingFunction<V, W>> cells) {
  return Poset<IndexingFunction<V, W>>::from_relation(
      std::move(cells),
      [](const IndexingFunction<V, W>& a, const IndexingFunction<V, W>& b) {
        return !(a == b) && a.is_face_of(b);
      });
}

}  // namespace detail

/// All cells of Hom(G, H), i.e. Phi of every clique of hom(G, H).
template <class V, class W>
std::vector<IndexingFunction<V, W>> hom_cells(
    const Graph<V>& g, const Graph<W>& h,
    std::size_t max_cliques = kDefaultMaxCliques) {
  auto hg = hom_graph(g, h);
  std::set<IndexingFunction<V, W>> cells;
  for (const auto& c : all_cliques(hg, max_cliques)) {
    IndexingFunction<V, W> eta;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<W> vals;
      for (const auto& f : c) vals.push_back(f.assignment[i].second);
      eta.assignment.emplace_back(g.vertex(i), make_simplex(std::move(vals)));
    }
    cells.insert(std::move(eta));
  }
  return {cells.begin(), cells.end()};
}

/// F_P(Hom(G, H)): cells ordered by pointwise inclusion.
template <class V, class W>
Poset<IndexingFunction<V, W>> hom_face_poset(
    const Graph<V>& g, const Graph<W>& h,
    std::size_t max_cliques = kDefaultMaxCliques) {
  return detail::cells_poset(hom_cells(g, h, max_cliques));
}

/// F_G(Hom(G, H)) = Comp(F_P(Hom(G, H))).
template <class V, class W>
Graph<IndexingFunction<V, W>> hom_face_graph(
    const Graph<V>& g, const Graph<W>& h,
    std::size_t max_cliques = kDefaultMaxCliques) {
  return comp(hom_face_poset(g, h, max_cliques));
}

/// C(hom(G, H)) dismantled onto the image of Psi.
template <class V, class W>
struct CellDismantling {
  Poset<Clique<V, W>> cliques;          // C(hom(G, H))
  Certificate<Clique<V, W>> certificate;
  Poset<Clique<V, W>> residual;         // Psi(F_P(Hom(G, H)))
};

/// Runs the fixed-point dismantling with f = Psi o Phi >= 1 on the clique
/// poset of hom(G, H).  The residual is exactly the image of Psi.
template <class V, class W>
CellDismantling<V, W> clique_to_cell_dismantle(
    const Graph<V>& g, const Graph<W>& h,
    std::size_t max_cliques = kDefaultMaxCliques) {
  auto hg = hom_graph(g, h);
  auto cp = clique_poset(hg, max_cliques);
  auto f = make_monotone_map(cp, [&](const Clique<V, W>& c) {
    return psi(g, h, phi(g, h, c));
  });
  auto cert = fixpoint_dismantle(cp, f);
  auto rest = residual(cp, cert);
  return {std::move(cp), std::move(cert), std::move(rest)};
}

enum class HomSide { source, target };

inline const char* to_string(HomSide s) {
  return s == HomSide::source ? "source" : "target";
}

template <class V, class W>
struct HomFoldDismantling {
  Graph<IndexingFunction<V, W>> face_graph;  // F_G(Hom(G, H))
  /// Cells of the folded pair and their images in face_graph.
  std::vector<std::pair<IndexingFunction<V, W>, IndexingFunction<V, W>>>
      embedding;
  Certificate<IndexingFunction<V, W>> certificate;
};

namespace detail {

template <class V, class W>
HomFoldDismantling<V, W> dismantle_onto_embedding(
    Graph<IndexingFunction<V, W>> big,
    const Graph<IndexingFunction<V, W>>& small,
    std::vector<std::pair<IndexingFunction<V, W>, IndexingFunction<V, W>>>
        embedding) {
  HomFoldDismantling<V, W> out;
  out.face_graph = std::move(big);
  out.embedding = std::move(embedding);

  // The embedding must be an isomorphism onto an induced subgraph.
  std::vector<IndexingFunction<V, W>> image;
  std::vector<std::size_t> at;
  for (const auto& [from, to] : out.embedding) {
    auto i = out.face_graph.find(to);
    if (!i)
      fail(ErrorCode::internal, "embedded cell " + label(to) +
                                    " is not a cell of Hom(G, H)");
    image.push_back(to);
    at.push_back(*i);
  }
  {
    auto sorted = at;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorCode::internal, "cell embedding is not injective");
  }
  for (std::size_t i = 0; i < at.size(); ++i)
    for (std::size_t j = 0; j < at.size(); ++j)
      if (small.adjacent_at(i, j) != out.face_graph.adjacent_at(at[i], at[j]))
        fail(ErrorCode::internal,
             "cell embedding is not onto an induced subgraph");

  auto cert = dismantles_onto(out.face_graph, image);
  if (!cert)
    fail(ErrorCode::internal,
         "face graph does not dismantle onto the folded copy");
  out.certificate = std::move(*cert);
  return out;
}

}  // namespace detail

/// Dismantling of F_G(Hom(G, H)) onto its copy of F_G(Hom(G - x, H)),
/// embedded by eta |-> eta o r_{x,a}.  `a` must dominate `x` in G.
template <class V, class W>
HomFoldDismantling<V, W> fold_source_hom_dismantle(
    const Graph<V>& g, const Graph<W>& h, const V& x, const V& a,
    std::size_t max_cliques = kDefaultMaxCliques) {
  using Cell = IndexingFunction<V, W>;
  if (!dominates(g, a, x))
    fail(ErrorCode::domination, "'" + label(x) + "' is not dominated by '" +
                                    label(a) + "' in the source graph");
  auto small = hom_face_graph(g.without(x), h, max_cliques);
  std::vector<std::pair<Cell, Cell>> embedding;
  for (const auto& eta : small.vertices()) {
    Cell big;
    for (const auto& v : g.vertices())
      big.assignment.emplace_back(v, eta(v == x ? a : v));
    embedding.emplace_back(eta, std::move(big));
  }
  return detail::dismantle_onto_embedding(hom_face_graph(g, h, max_cliques),
                                          small, std::move(embedding));
}

/// Dismantling of F_G(Hom(G, H)) onto its copy of F_G(Hom(G, H - u)),
/// embedded by inclusion of value sets.  `b` must dominate `u` in H.
template <class V, class W>
HomFoldDismantling<V, W> fold_target_hom_dismantle(
    const Graph<V>& g, const Graph<W>& h, const W& u, const W& b,
    std::size_t max_cliques = kDefaultMaxCliques) {
  using Cell = IndexingFunction<V, W>;
  if (!dominates(h, b, u))
    fail(ErrorCode::domination, "'" + label(u) + "' is not dominated by '" +
                                    label(b) + "' in the target graph");
  auto small = hom_face_graph(g, h.without(u), max_cliques);
  std::vector<std::pair<Cell, Cell>> embedding;
  for (const auto& eta : small.vertices()) embedding.emplace_back(eta, eta);
  return detail::dismantle_onto_embedding(hom_face_graph(g, h, max_cliques),
                                          small, std::move(embedding));
}

/// Either of the above, for graphs sharing a vertex type.
template <class V>
HomFoldDismantling<V, V> fold_induced_hom_dismantle(
    const Graph<V>& g, const Graph<V>& h, HomSide side, const V& x,
    const V& a, std::size_t max_cliques = kDefaultMaxCliques) {
  return side == HomSide::source
             ? fold_source_hom_dismantle(g, h, x, a, max_cliques)
             : fold_target_hom_dismantle(g, h, x, a, max_cliques);
}

}  // namespace dismantle

#endif  // DISMANTLE_HOM_COMPLEX_HPP
