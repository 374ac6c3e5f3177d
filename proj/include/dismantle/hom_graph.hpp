#ifndef DISMANTLE_HOM_GRAPH_HPP
#define DISMANTLE_HOM_GRAPH_HPP

// Graph morphisms and the reflexive graph hom(G, H) they span.
//
// f ~ f' in hom(G, H) iff x ~ y in G implies f(x) ~ f'(y) in H.  Two
// morphisms are homotopic iff they lie in one connected component.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "dismantle/certificate.hpp"
#include "dismantle/error.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/graph_core.hpp"

namespace dismantle {

inline constexpr std::size_t kDefaultMorphismExtensions = 10'000'000;

/// A vertex map, stored as (source vertex, image) pairs sorted by source.
/// Compared lexicographically on the images in source order.
template <class V, class W>
struct Morphism {
  std::vector<std::pair<V, W>> assignment;

  const W& operator()(const V& x) const {
    auto it = std::lower_bound(
        assignment.begin(), assignment.end(), x,
        [](const std::pair<V, W>& p, const V& key) { return p.first < key; });
    if (it == assignment.end() || !(it->first == x))
      fail(ErrorCode::input, "morphism is not defined on '" + label(x) + "'");
    return it->second;
  }

  std::size_t size() const noexcept { return assignment.size(); }

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism& a, const Morphism& b) {
    return a.assignment <=> b.assignment;
  }
};

/// JSON object {"x": "f(x)", ...}.
template <class V, class W>
json label_json(const Morphism<V, W>& f) {
  json out = json::object();
  for (const auto& [x, y] : f.assignment) out[label(x)] = label_json(y);
  return out;
}

template <class V, class W>
Morphism<V, W> make_morphism(const Graph<V>& g, const std::vector<W>& images) {
  if (images.size() != g.size())
    fail(ErrorCode::input, "morphism needs one image per source vertex");
  Morphism<V, W> f;
  for (std::size_t i = 0; i < g.size(); ++i)
    f.assignment.emplace_back(g.vertex(i), images[i]);
  return f;
}

namespace detail {

/// Image indices in H of f, one per vertex of G, or nothing if f is not a
/// vertex map V(G) -> V(H).
template <class V, class W>
std::optional<std::vector<std::size_t>> image_indices(const Graph<V>& g,
                                                      const Graph<W>& h,
                                                      const Morphism<V, W>& f) {
  if (f.assignment.size() != g.size()) return std::nullopt;
  std::vector<std::size_t> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(f.assignment[i].first == g.vertex(i))) return std::nullopt;
    auto j = h.find(f.assignment[i].second);
    if (!j) return std::nullopt;
    out[i] = *j;
  }
  return out;
}

template <class V, class W>
std::vector<std::size_t> checked_images(const Graph<V>& g, const Graph<W>& h,
                                        const Morphism<V, W>& f) {
  auto idx = image_indices(g, h, f);
  if (!idx)
    fail(ErrorCode::input, "map " + label(f) +
                               " is not a vertex map between the given graphs");
  return *idx;
}

template <class V, class W>
bool mixed_adjacent(const Graph<V>& g, const Graph<W>& h,
                    const std::vector<std::size_t>& f,
                    const std::vector<std::size_t>& f2) {
  for (std::size_t x = 0; x < g.size(); ++x) {
    const Bits& r = g.row(x);
    for (auto y = r.find_first(); y != Bits::npos; y = r.find_next(y))
      if (!h.adjacent_at(f[x], f2[y])) return false;
  }
  return true;
}

}  // namespace detail

/// True iff f is a graph morphism G -> H (loops included).
template <class V, class W>
bool is_morphism(const Graph<V>& g, const Graph<W>& h,
                 const Morphism<V, W>& f) {
  auto idx = detail::image_indices(g, h, f);
  return idx && detail::mixed_adjacent(g, h, *idx, *idx);
}

/// All morphisms G -> H in lexicographic order of their assignments.
/// Backtracking in vertex order of G with forward checks against assigned
/// neighbours.
template <class V, class W>
std::vector<Morphism<V, W>> enumerate_morphisms(
    const Graph<V>& g, const Graph<W>& h,
    std::size_t max_extensions = kDefaultMorphismExtensions) {
  const std::size_t n = g.size();
  std::vector<Morphism<V, W>> out;
  std::vector<std::size_t> img(n);
  std::size_t extensions = 0;

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      Morphism<V, W> f;
      f.assignment.reserve(n);
      for (std::size_t k = 0; k < n; ++k)
        f.assignment.emplace_back(g.vertex(k), h.vertex(img[k]));
      out.push_back(std::move(f));
      return;
    }
    for (std::size_t w = 0; w < h.size(); ++w) {
      if (g.looped_at(i) && !h.looped_at(w)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (g.adjacent_at(i, j) && !h.adjacent_at(w, img[j])) ok = false;
      if (!ok) continue;
      if (++extensions > max_extensions)
        throw ResourceError("morphism enumeration", max_extensions);
      img[i] = w;
      self(self, i + 1);
    }
  };
  search(search, 0);
  return out;
}

/// f ~ f' in hom(G, H).  Both must be morphisms G -> H.
template <class V, class W>
bool morphisms_adjacent(const Graph<V>& g, const Graph<W>& h,
                        const Morphism<V, W>& f, const Morphism<V, W>& f2) {
  auto a = detail::checked_images(g, h, f);
  auto b = detail::checked_images(g, h, f2);
  if (!detail::mixed_adjacent(g, h, a, a) || !detail::mixed_adjacent(g, h, b, b))
    fail(ErrorCode::input, "arguments are not morphisms G -> H");
  return detail::mixed_adjacent(g, h, a, b);
}

/// The reflexive graph hom(G, H) on all morphisms G -> H.
template <class V, class W>
Graph<Morphism<V, W>> hom_graph(
    const Graph<V>& g, const Graph<W>& h,
    std::size_t max_extensions = kDefaultMorphismExtensions) {
  auto ms = enumerate_morphisms(g, h, max_extensions);
  std::vector<std::vector<std::size_t>> idx;
  idx.reserve(ms.size());
  for (const auto& f : ms) idx.push_back(*detail::image_indices(g, h, f));
  std::vector<std::pair<Morphism<V, W>, Morphism<V, W>>> edges;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i; j < ms.size(); ++j)
      if (detail::mixed_adjacent(g, h, idx[i], idx[j]))
        edges.emplace_back(ms[i], ms[j]);
  return Graph<Morphism<V, W>>(std::move(ms), edges);
}

/// A path f = H_0 ~ H_1 ~ ... ~ H_N = f' in hom(G, H), shortest, or
/// nothing.  N is whatever the breadth-first search realises.
template <class V, class W>
std::optional<std::vector<Morphism<V, W>>> homotopy(
    const Graph<V>& g, const Graph<W>& h, const Morphism<V, W>& f,
    const Morphism<V, W>& f2,
    std::size_t max_extensions = kDefaultMorphismExtensions) {
  morphisms_adjacent(g, h, f, f2);  // validates both arguments
  auto hg = hom_graph(g, h, max_extensions);
  const std::size_t s = hg.index_of(f), t = hg.index_of(f2);
  std::vector<std::size_t> parent(hg.size(), hg.size());
  std::deque<std::size_t> queue{s};
  parent[s] = s;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    if (u == t) break;
    const Bits& r = hg.row(u);
    for (auto v = r.find_first(); v != Bits::npos; v = r.find_next(v)) {
      if (parent[v] != hg.size()) continue;
      parent[v] = u;
      queue.push_back(v);
    }
  }
  if (parent[t] == hg.size()) return std::nullopt;
  std::vector<Morphism<V, W>> path;
  for (auto v = t;; v = parent[v]) {
    path.push_back(hg.vertex(v));
    if (v == s) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

template <class V, class W>
bool homotopic(const Graph<V>& g, const Graph<W>& h, const Morphism<V, W>& f,
               const Morphism<V, W>& f2,
               std::size_t max_extensions = kDefaultMorphismExtensions) {
  return homotopy(g, h, f, f2, max_extensions).has_value();
}

// Elementary maps.

template <class V>
Morphism<V, V> identity_morphism(const Graph<V>& g) {
  return make_morphism(g, g.vertices());
}

/// h o f.
template <class U, class V, class W>
Morphism<U, W> compose(const Morphism<V, W>& h, const Morphism<U, V>& f) {
  Morphism<U, W> out;
  out.assignment.reserve(f.size());
  for (const auto& [x, y] : f.assignment) out.assignment.emplace_back(x, h(y));
  return out;
}

/// i_x : G - x -> G.
template <class V>
Morphism<V, V> inclusion(const Graph<V>& g, const V& x) {
  auto sub = g.without(x);
  return make_morphism(sub, sub.vertices());
}

/// r_{x,a} : G -> G - x, sending x to a and fixing everything else.  Only
/// a morphism when a dominates x (or, more generally, N(x) within N(a)).
template <class V>
Morphism<V, V> fold_retraction(const Graph<V>& g, const V& x, const V& a) {
  g.index_of(x);
  g.index_of(a);
  Morphism<V, V> r;
  for (const auto& v : g.vertices()) r.assignment.emplace_back(v, v == x ? a : v);
  return r;
}

/// Psi_{x,a}(f) = f o r_{x,a} : hom(G - x, H) -> hom(G, H).
template <class V, class W>
Morphism<V, W> extend_along_fold(const Graph<V>& g, const Morphism<V, W>& f,
                                 const V& x, const V& a) {
  return compose(f, fold_retraction(g, x, a));
}

/// Phi_x(f) = f o i_x : hom(G, H) -> hom(G - x, H).
template <class V, class W>
Morphism<V, W> restrict_away(const Morphism<V, W>& f, const V& x) {
  Morphism<V, W> out;
  for (const auto& p : f.assignment)
    if (!(p.first == x)) out.assignment.push_back(p);
  return out;
}

/// Phi_{u,b}(f) = r_{u,b} o f : hom(G, H) -> hom(G, H - u).
template <class V, class W>
Morphism<V, W> fold_target(const Morphism<V, W>& f, const W& u, const W& b) {
  Morphism<V, W> out = f;
  for (auto& p : out.assignment)
    if (p.second == u) p.second = b;
  return out;
}

/// Strong-deformation-retract homotopy 1_G = H_0, H_1, ..., H_N built from
/// a dismantling certificate: H_i = r_{x_i,a_i} o H_{i-1}.  Every H_i
/// fixes the residual subgraph and H_N retracts onto it.
template <class V>
std::vector<Morphism<V, V>> sdr_homotopy(const Graph<V>& g,
                                         const Certificate<V>& cert) {
  if (auto rp = replay_certificate(g, cert); !rp)
    fail(ErrorCode::certificate,
         "invalid certificate at step " + std::to_string(*rp.failed_step) +
             ": " + rp.reason);
  std::vector<Morphism<V, V>> out{identity_morphism(g)};
  for (const auto& s : cert.steps) {
    Morphism<V, V> next = out.back();
    for (auto& p : next.assignment)
      if (p.second == s.deleted) p.second = s.witness;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace dismantle

#endif  // DISMANTLE_HOM_GRAPH_HPP
