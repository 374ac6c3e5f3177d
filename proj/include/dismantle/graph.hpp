#ifndef DISMANTLE_GRAPH_HPP
#define DISMANTLE_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dismantle/error.hpp"
#include "dismantle/label.hpp"

namespace dismantle {

using Bits = boost::dynamic_bitset<>;

/// Finite undirected graph without parallel edges.  A loop on x is the
/// self-adjacency x ~ x.  Vertices are kept sorted; deleting vertices keeps
/// the ids of the survivors.  Immutable once built.
template <class V>
class Graph {
 public:
  using vertex_type = V;
  using Edge = std::pair<V, V>;

  Graph() = default;

  /// Builds a graph from vertices and edges; an edge (x, x) is a loop.
  /// Duplicate vertices or edges are merged.
  Graph(std::vector<V> vertices, std::span<const Edge> edges)
      : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
    rows_.assign(vertices_.size(), Bits(vertices_.size()));
    for (const auto& [x, y] : edges) {
      const std::size_t i = index_of(x);
      const std::size_t j = index_of(y);
      rows_[i].set(j);
      rows_[j].set(i);
    }
  }

  Graph(std::vector<V> vertices, const std::vector<Edge>& edges)
      : Graph(std::move(vertices), std::span<const Edge>(edges)) {}

  /// Builds the graph on `vertices` with x ~ y iff `adjacent(x, y)`.  The
  /// predicate must be symmetric; it is queried for i <= j only.
  template <class Pred>
  static Graph from_predicate(std::vector<V> vertices, Pred adjacent) {
    Graph g;
    g.vertices_ = std::move(vertices);
    std::sort(g.vertices_.begin(), g.vertices_.end());
    g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()),
                      g.vertices_.end());
    const std::size_t n = g.vertices_.size();
    g.rows_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (adjacent(g.vertices_[i], g.vertices_[j])) {
          g.rows_[i].set(j);
          g.rows_[j].set(i);
        }
      }
    }
    return g;
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<V>& vertices() const noexcept { return vertices_; }
  const V& vertex(std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> find(const V& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || !(*it == v)) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  bool contains(const V& v) const { return find(v).has_value(); }

  std::size_t index_of(const V& v) const {
    if (auto i = find(v)) return *i;
    fail(ErrorCode::input, "unknown vertex '" + label(v) + "'");
  }

  /// Adjacency row of vertex i, indexed by vertex position.
  const Bits& row(std::size_t i) const { return rows_[i]; }

  bool adjacent_at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  bool adjacent(const V& x, const V& y) const {
    return rows_[index_of(x)][index_of(y)];
  }

  bool looped_at(std::size_t i) const { return rows_[i][i]; }
  bool looped(const V& x) const { return looped_at(index_of(x)); }

  bool reflexive() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (!looped_at(i)) return false;
    return true;
  }

  std::size_t degree_at(std::size_t i) const { return rows_[i].count(); }

  /// N(x) = {y : y ~ x}; contains x iff x is looped.
  std::vector<V> open_neighborhood(const V& x) const {
    const Bits& r = rows_[index_of(x)];
    std::vector<V> out;
    for (auto j = r.find_first(); j != Bits::npos; j = r.find_next(j))
      out.push_back(vertices_[j]);
    return out;
  }

  /// N[x] = N(x) together with x.
  std::vector<V> closed_neighborhood(const V& x) const {
    auto out = open_neighborhood(x);
    if (!looped(x)) out.insert(std::lower_bound(out.begin(), out.end(), x), x);
    return out;
  }

  /// Edges (x, y) with x <= y, loops included, in vertex order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (auto j = rows_[i].find_first(); j != Bits::npos;
           j = rows_[i].find_next(j)) {
        if (j >= i) out.emplace_back(vertices_[i], vertices_[j]);
      }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      m += rows_[i].count() + (rows_[i][i] ? 1 : 0);
    }
    return m / 2;
  }

  /// Subgraph induced by the vertices whose positions are set in `keep`.
  Graph induced_by_mask(const Bits& keep) const {
    Graph g;
    std::vector<std::size_t> idx;
    for (auto i = keep.find_first(); i != Bits::npos; i = keep.find_next(i))
      idx.push_back(i);
    g.vertices_.reserve(idx.size());
    for (auto i : idx) g.vertices_.push_back(vertices_[i]);
    g.rows_.assign(idx.size(), Bits(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        if (rows_[idx[a]][idx[b]]) g.rows_[a].set(b);
    return g;
  }

  /// Subgraph induced by `keep` (which must be vertices of this graph).
  Graph induced(std::span<const V> keep) const {
    Bits mask(size());
    for (const auto& v : keep) mask.set(index_of(v));
    return induced_by_mask(mask);
  }

  Graph induced(const std::vector<V>& keep) const {
    return induced(std::span<const V>(keep));
  }

  /// G - x.
  Graph without(const V& x) const {
    Bits mask(size());
    mask.set();
    mask.reset(index_of(x));
    return induced_by_mask(mask);
  }

  /// Canonical text lines (`v <id> [loop]`, `e <x> <y>`), in vertex order.
  std::vector<std::string> canonical_lines() const {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < size(); ++i) {
      lines.push_back("v " + label(vertices_[i]) +
                      (looped_at(i) ? " loop" : ""));
    }
    for (const auto& [x, y] : edges()) {
      if (x == y) continue;
      std::string a = label(x), b = label(y);
      lines.push_back("e " + a + " " + b);
    }
    return lines;
  }

  /// Content digest, independent of the vertex ordering.
  std::string digest() const {
    auto lines = canonical_lines();
    for (auto& l : lines) {
      if (l[0] == 'e') {
        auto p1 = l.find(' ', 2);
        std::string a = l.substr(2, p1 - 2), b = l.substr(p1 + 1);
        if (b < a) l = "e " + b + " " + a;
      }
    }
    lines.push_back("#graph");
    return digest_lines(std::move(lines));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<V> vertices_;
  std::vector<Bits> rows_;
};

/// Maps every vertex through `fn`; `fn` must be injective.
template <class V, class Fn>
auto relabel(const Graph<V>& g, Fn fn) {
  using W = std::decay_t<decltype(fn(std::declval<const V&>()))>;
  std::vector<W> verts;
  std::vector<std::pair<W, W>> edges;
  for (const auto& v : g.vertices()) verts.push_back(fn(v));
  for (const auto& [x, y] : g.edges()) edges.emplace_back(fn(x), fn(y));
  Graph<W> out(verts, edges);
  if (out.size() != g.size())
    fail(ErrorCode::input, "relabeling is not injective");
  return out;
}

/// G° : every vertex gets a loop.  Idempotent.
template <class V>
Graph<V> reflexive_closure(const Graph<V>& g) {
  return Graph<V>::from_predicate(g.vertices(), [&](const V& x, const V& y) {
    return x == y || g.adjacent(x, y);
  });
}

// Canonical small graphs on 0..n-1.

inline Graph<int> path_graph(int n, bool reflexive = false) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    if (reflexive) es.emplace_back(i, i);
    if (i + 1 < n) es.emplace_back(i, i + 1);
  }
  return Graph<int>(vs, es);
}

inline Graph<int> cycle_graph(int n, bool reflexive = false) {
  if (n < 3) fail(ErrorCode::input, "cycles need at least 3 vertices");
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    if (reflexive) es.emplace_back(i, i);
    es.emplace_back(i, (i + 1) % n);
  }
  return Graph<int>(vs, es);
}

inline Graph<int> complete_graph(int n, bool reflexive = false) {
  std::vector<int> vs;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  return Graph<int>::from_predicate(
      vs, [&](int x, int y) { return x != y || reflexive; });
}

/// Parses "P3", "C5°", "K2o" (a trailing `°` or `o` makes it reflexive).
inline std::optional<Graph<int>> named_graph(std::string name) {
  bool reflexive = false;
  const std::string degree = "\xC2\xB0";  // U+00B0 in UTF-8
  if (name.size() > degree.size() &&
      name.compare(name.size() - degree.size(), degree.size(), degree) == 0) {
    reflexive = true;
    name.resize(name.size() - degree.size());
  } else if (name.size() > 1 && name.back() == 'o') {
    reflexive = true;
    name.pop_back();
  }
  if (name.size() < 2) return std::nullopt;
  const char kind = name[0];
  int n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    n = n * 10 + (name[i] - '0');
    if (n > 4096) return std::nullopt;
  }
  switch (kind) {
    case 'P': return path_graph(n, reflexive);
    case 'C':
      if (n < 3) return std::nullopt;
      return cycle_graph(n, reflexive);
    case 'K': return complete_graph(n, reflexive);
    default: return std::nullopt;
  }
}

}  // namespace dismantle

#endif  // DISMANTLE_GRAPH_HPP
