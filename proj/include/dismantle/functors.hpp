#ifndef DISMANTLE_FUNCTORS_HPP
#define DISMANTLE_FUNCTORS_HPP

// Functors between reflexive graphs, posets and simplicial complexes.
//
//   comp            poset   -> graph    comparability graph
//   clique_poset    graph   -> poset    nonempty cliques under inclusion
//   clique_complex  graph   -> complex  cliques as simplices
//   face_graph      complex -> graph    simplices, adjacent when nested
//   order_complex   poset   -> complex  chains as simplices
//   face_poset      complex -> poset    simplices under inclusion
//
// Images are labelled canonically (cliques and simplices as sorted vertex
// lists) so composites can be compared for equality, not just isomorphism.
// Loops play no role in cliques: a clique is a set of pairwise adjacent
// distinct vertices.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "dismantle/complex.hpp"
#include "dismantle/error.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/poset.hpp"

namespace dismantle {

inline constexpr std::size_t kDefaultMaxCliques = 1'000'000;

/// Comp(P): reflexive graph, x ~ y iff x and y are comparable.
template <class T>
Graph<T> comp(const Poset<T>& p) {
  std::vector<std::pair<T, T>> edges;
  for (std::size_t i = 0; i < p.size(); ++i) {
    edges.emplace_back(p.element(i), p.element(i));
    for (auto j = p.above(i).find_first(); j != Bits::npos;
         j = p.above(i).find_next(j))
      edges.emplace_back(p.element(i), p.element(j));
  }
  return Graph<T>(p.elements(), edges);
}

namespace detail {

// Adjacency among distinct vertices.
template <class V>
std::vector<Bits> strict_rows(const Graph<V>& g) {
  std::vector<Bits> rows;
  rows.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Bits r = g.row(i);
    r.reset(i);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace detail

/// Every nonempty clique, as a sorted vertex list, in lexicographic order.
/// Throws ResourceError past `max_cliques`.
template <class V>
std::vector<Simplex<V>> all_cliques(const Graph<V>& g,
                                    std::size_t max_cliques = kDefaultMaxCliques) {
  const std::size_t n = g.size();
  const auto rows = detail::strict_rows(g);
  std::vector<Simplex<V>> out;
  Simplex<V> current;

  // Candidates are always larger than the last chosen vertex, so every
  // clique is produced once, in lexicographic order.
  auto expand = [&](auto&& self, const Bits& candidates) -> void {
    for (auto v = candidates.find_first(); v != Bits::npos;
         v = candidates.find_next(v)) {
      current.push_back(g.vertex(v));
      if (out.size() >= max_cliques)
        throw ResourceError("clique enumeration", max_cliques);
      out.push_back(current);
      Bits next = candidates & rows[v];
      for (auto u = next.find_first(); u != Bits::npos && u <= v;
           u = next.find_next(u))
        next.reset(u);
      if (next.any()) self(self, next);
      current.pop_back();
    }
  };
  Bits all(n);
  all.set();
  expand(expand, all);
  return out;
}

/// Maximal cliques by Bron-Kerbosch with Tomita pivoting, sorted.
template <class V>
std::vector<Simplex<V>> maximal_cliques(
    const Graph<V>& g, std::size_t max_cliques = kDefaultMaxCliques) {
  const std::size_t n = g.size();
  const auto rows = detail::strict_rows(g);
  std::vector<Simplex<V>> out;
  std::vector<std::size_t> r;

  auto bk = [&](auto&& self, Bits p, Bits x) -> void {
    if (p.none() && x.none()) {
      if (out.size() >= max_cliques)
        throw ResourceError("maximal clique enumeration", max_cliques);
      Simplex<V> c;
      for (auto i : r) c.push_back(g.vertex(i));
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    // Pivot maximising |P & N(u)| over P | X.
    Bits px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = 0;
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      std::size_t c = (p & rows[u]).count();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    Bits todo = p - rows[pivot];
    for (auto v = todo.find_first(); v != Bits::npos; v = todo.find_next(v)) {
      r.push_back(v);
      self(self, p & rows[v], x & rows[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  };
  if (n > 0) {
    Bits p(n);
    p.set();
    bk(bk, p, Bits(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// C(G): nonempty cliques ordered by inclusion.
template <class V>
Poset<Simplex<V>> clique_poset(const Graph<V>& g,
                               std::size_t max_cliques = kDefaultMaxCliques) {
  auto cliques = all_cliques(g, max_cliques);
  std::vector<std::pair<Simplex<V>, Simplex<V>>> covers;
  for (const auto& c : cliques) {
    if (c.size() < 2) continue;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Simplex<V> face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      covers.emplace_back(std::move(face), c);
    }
  }
  return Poset<Simplex<V>>::from_covers(std::move(cliques), covers);
}

/// Clique complex: simplices are the cliques of G.
template <class V>
SimplicialComplex<V> clique_complex(const Graph<V>& g,
                                    std::size_t max_cliques = kDefaultMaxCliques) {
  return SimplicialComplex<V>::from_facets(maximal_cliques(g, max_cliques));
}

/// Face poset: nonempty simplices under inclusion.
template <class T>
Poset<Simplex<T>> face_poset(const SimplicialComplex<T>& k) {
  const auto& simplices = k.simplices();
  std::vector<std::pair<Simplex<T>, Simplex<T>>> covers;
  for (const auto& s : simplices) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex<T> face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      covers.emplace_back(std::move(face), s);
    }
  }
  return Poset<Simplex<T>>::from_covers(simplices, covers);
}

/// Face graph: nonempty simplices, adjacent when one contains the other.
template <class T>
Graph<Simplex<T>> face_graph(const SimplicialComplex<T>& k) {
  return comp(face_poset(k));
}

/// Order complex: simplices are the chains of P.  Facets are the maximal
/// chains, found by walking covers from minimal to maximal elements.
template <class T>
SimplicialComplex<T> order_complex(const Poset<T>& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j = p.above(i).find_first(); j != Bits::npos;
         j = p.above(i).find_next(j))
      if (!(p.above(i) & p.below(j)).any()) up[i].push_back(j);

  std::vector<Simplex<T>> chains;
  Simplex<T> current;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    current.push_back(p.element(i));
    if (up[i].empty()) {
      chains.push_back(make_simplex(current));
    } else {
      for (auto j : up[i]) self(self, j);
    }
    current.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i)
    if (p.below(i).none()) walk(walk, i);
  return SimplicialComplex<T>::from_facets(std::move(chains));
}

/// Reflexive upper bound graph: p ~ q iff some z is above both.
template <class T>
Graph<T> rub(const Poset<T>& p) {
  std::vector<Bits> upper;  // P_{>=x}
  for (std::size_t i = 0; i < p.size(); ++i) {
    Bits u = p.above(i);
    u.set(i);
    upper.push_back(std::move(u));
  }
  return Graph<T>::from_predicate(p.elements(), [&](const T& x, const T& y) {
    return upper[p.index_of(x)].intersects(upper[p.index_of(y)]);
  });
}

/// m(P): the subgraph of RUB(P) induced by the minimal elements.
template <class T>
Graph<T> atoms_graph(const Poset<T>& p) {
  return rub(p).induced(p.atoms());
}

/// Identifies singleton cliques {v} with v, e.g. to compare m(C(G)) with G°.
template <class V>
Graph<V> identify_singletons(const Graph<Simplex<V>>& g) {
  return relabel(g, [](const Simplex<V>& s) {
    if (s.size() != 1)
      fail(ErrorCode::input, "vertex " + label(s) + " is not a singleton");
    return s.front();
  });
}

// Barycentric subdivision, two routes per category.

/// Bd(G) = Comp(C(G)).
template <class V>
Graph<Simplex<V>> bd(const Graph<V>& g) {
  return comp(clique_poset(g));
}

/// Bd(G) = F_G(clique complex of G).
template <class V>
Graph<Simplex<V>> bd_via_complexes(const Graph<V>& g) {
  return face_graph(clique_complex(g));
}

/// Bd(P) = C(Comp(P)).
template <class T>
Poset<Simplex<T>> bd(const Poset<T>& p) {
  return clique_poset(comp(p));
}

/// Bd(P) = F_P(order complex of P).
template <class T>
Poset<Simplex<T>> bd_via_complexes(const Poset<T>& p) {
  return face_poset(order_complex(p));
}

/// Bd(K) = clique complex of F_G(K).
template <class T>
SimplicialComplex<Simplex<T>> bd(const SimplicialComplex<T>& k) {
  return clique_complex(face_graph(k));
}

/// Bd(K) = order complex of F_P(K).
template <class T>
SimplicialComplex<Simplex<T>> bd_via_posets(const SimplicialComplex<T>& k) {
  return order_complex(face_poset(k));
}

}  // namespace dismantle

#endif  // DISMANTLE_FUNCTORS_HPP
