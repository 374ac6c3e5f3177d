#ifndef DISMANTLE_GRAPH_CORE_HPP
#define DISMANTLE_GRAPH_CORE_HPP

// Domination, folding and dismantling of graphs.
//
// x is dominated by a (a != x) when N(x) is contained in N(a), with open
// neighbourhoods.  Inclusion is not strict, so a loopless isolated vertex is
// dominated by every other vertex.

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "dismantle/certificate.hpp"
#include "dismantle/error.hpp"
#include "dismantle/graph.hpp"

namespace dismantle {

template <class V>
std::vector<V> open_neighborhood(const Graph<V>& g, const V& x) {
  return g.open_neighborhood(x);
}

/// True iff N(x) is a subset of N(a).  Requires a != x.
template <class V>
bool dominates(const Graph<V>& g, const V& a, const V& x) {
  if (a == x)
    fail(ErrorCode::input,
         "domination needs two distinct vertices, got '" + label(x) + "' twice");
  return g.row(g.index_of(x)).is_subset_of(g.row(g.index_of(a)));
}

namespace detail {

/// A graph with some vertices switched off.  Neighbourhoods are taken in
/// the induced subgraph on the live vertices.
template <class V>
class ResidualGraph {
 public:
  explicit ResidualGraph(const Graph<V>& g) : g_(&g), alive_(g.size()) {
    alive_.set();
  }

  const Graph<V>& graph() const { return *g_; }
  const Bits& alive() const { return alive_; }
  bool alive(std::size_t i) const { return alive_[i]; }

  bool dominates(std::size_t a, std::size_t x) const {
    if (a == x || !alive_[a] || !alive_[x]) return false;
    Bits nx = g_->row(x) & alive_;
    return nx.is_subset_of(g_->row(a));
  }

  std::optional<std::size_t> first_witness(std::size_t x) const {
    Bits nx = g_->row(x) & alive_;
    for (auto a = alive_.find_first(); a != Bits::npos;
         a = alive_.find_next(a)) {
      if (a != x && nx.is_subset_of(g_->row(a))) return a;
    }
    return std::nullopt;
  }

  void erase(std::size_t i) { alive_.reset(i); }

 private:
  const Graph<V>* g_;
  Bits alive_;
};

/// Greedy dismantling restricted to the positions in `deletable`.  With no
/// generator the smallest dominated vertex and its smallest witness are
/// taken; otherwise a uniformly random legal step.
template <class V, class Rng = std::mt19937_64>
std::pair<Bits, std::vector<std::pair<std::size_t, std::size_t>>>
greedy_dismantle(const Graph<V>& g, const Bits& deletable, Rng* rng = nullptr) {
  ResidualGraph<V> r(g);
  std::vector<std::pair<std::size_t, std::size_t>> steps;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    if (rng == nullptr) {
      for (auto x = deletable.find_first(); x != Bits::npos && !pick;
           x = deletable.find_next(x)) {
        if (!r.alive(x)) continue;
        if (auto a = r.first_witness(x)) pick.emplace(x, *a);
      }
    } else {
      std::vector<std::pair<std::size_t, std::size_t>> all;
      for (auto x = deletable.find_first(); x != Bits::npos;
           x = deletable.find_next(x)) {
        if (!r.alive(x)) continue;
        for (auto a = r.alive().find_first(); a != Bits::npos;
             a = r.alive().find_next(a))
          if (r.dominates(a, x)) all.emplace_back(x, a);
      }
      if (!all.empty()) {
        std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
        pick = all[d(*rng)];
      }
    }
    if (!pick) break;
    steps.push_back(*pick);
    r.erase(pick->first);
  }
  return {r.alive(), std::move(steps)};
}

template <class V>
Certificate<V> make_graph_certificate(
    const Graph<V>& g,
    const std::vector<std::pair<std::size_t, std::size_t>>& steps) {
  Certificate<V> cert;
  cert.category = Category::graph;
  cert.start_digest = g.digest();
  for (auto [x, a] : steps) cert.steps.push_back({g.vertex(x), g.vertex(a)});
  return cert;
}

}  // namespace detail

/// All (x, a) with a dominating x, ascending in x then a.  Reported as
/// candidate steps {deleted = x, witness = a}.
template <class V>
std::vector<Step<V>> find_dominated(const Graph<V>& g) {
  detail::ResidualGraph<V> r(g);
  std::vector<Step<V>> out;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t a = 0; a < g.size(); ++a)
      if (r.dominates(a, x)) out.push_back({g.vertex(x), g.vertex(a)});
  return out;
}

template <class V>
bool is_stiff(const Graph<V>& g) {
  detail::ResidualGraph<V> r(g);
  for (std::size_t x = 0; x < g.size(); ++x)
    if (r.first_witness(x)) return false;
  return true;
}

/// The fold G -> G - x along x |-> a.  Returns G - x.
template <class V>
Graph<V> fold(const Graph<V>& g, const V& x, const V& a) {
  if (!dominates(g, a, x))
    fail(ErrorCode::domination, "vertex '" + label(x) +
                                    "' is not dominated by '" + label(a) + "'");
  return g.without(x);
}

/// Folds dominated vertices (smallest first) until the graph is stiff.
template <class V>
Reduction<Graph<V>, V> dismantle_core(const Graph<V>& g) {
  Bits all(g.size());
  all.set();
  auto [alive, steps] = detail::greedy_dismantle(g, all);
  return {g.induced_by_mask(alive), detail::make_graph_certificate(g, steps)};
}

/// As above with uniformly random tie-breaking.
template <class V, class Rng>
Reduction<Graph<V>, V> dismantle_core(const Graph<V>& g, Rng& rng) {
  Bits all(g.size());
  all.set();
  auto [alive, steps] = detail::greedy_dismantle(g, all, &rng);
  return {g.induced_by_mask(alive), detail::make_graph_certificate(g, steps)};
}

namespace detail {

template <class V, class Rng>
std::optional<Certificate<V>> dismantles_onto_impl(const Graph<V>& g,
                                                   std::span<const V> keep,
                                                   Rng* rng) {
  Bits deletable(g.size());
  deletable.set();
  for (const auto& v : keep) {
    auto i = g.find(v);
    if (!i)
      fail(ErrorCode::input,
           "target vertex '" + label(v) + "' is not in the graph");
    deletable.reset(*i);
  }
  auto [alive, steps] = greedy_dismantle(g, deletable, rng);
  if ((alive & deletable).any()) return std::nullopt;
  return make_graph_certificate(g, steps);
}

}  // namespace detail

/// Certificate for G dismantling onto the subgraph induced by `keep`, or
/// nothing.  Greedy deletion is complete here: if G dismantles onto H and
/// x outside H is dominated, G - x still dismantles onto H.
template <class V>
std::optional<Certificate<V>> dismantles_onto(const Graph<V>& g,
                                              std::span<const V> keep) {
  return detail::dismantles_onto_impl<V, std::mt19937_64>(g, keep, nullptr);
}

template <class V>
std::optional<Certificate<V>> dismantles_onto(const Graph<V>& g,
                                              const std::vector<V>& keep) {
  return dismantles_onto(g, std::span<const V>(keep));
}

template <class V, class Rng>
std::optional<Certificate<V>> dismantles_onto(const Graph<V>& g,
                                              const std::vector<V>& keep,
                                              Rng& rng) {
  return detail::dismantles_onto_impl(g, std::span<const V>(keep), &rng);
}

/// Replays a graph certificate.  Does not look at the digest.
template <class V>
Replay replay_certificate(const Graph<V>& g, const Certificate<V>& cert) {
  if (cert.category != Category::graph)
    return Replay::failure(0, "certificate category is not graph");
  detail::ResidualGraph<V> r(g);
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& s = cert.steps[k];
    auto x = g.find(s.deleted);
    auto a = g.find(s.witness);
    if (!x || !a)
      return Replay::failure(k, "step names a vertex not in the graph");
    if (!r.alive(*x))
      return Replay::failure(k, "vertex '" + label(s.deleted) +
                                    "' already deleted");
    if (!r.alive(*a))
      return Replay::failure(k, "witness '" + label(s.witness) +
                                    "' already deleted");
    if (!r.dominates(*a, *x))
      return Replay::failure(k, "'" + label(s.deleted) +
                                    "' is not dominated by '" +
                                    label(s.witness) + "'");
    r.erase(*x);
  }
  return {};
}

/// True iff every step is legal.  Throws stale_certificate if the digest
/// does not match `g`.
template <class V>
bool verify_certificate(const Graph<V>& g, const Certificate<V>& cert) {
  if (cert.start_digest != g.digest())
    fail(ErrorCode::stale_certificate,
         "certificate digest " + cert.start_digest +
             " does not match graph digest " + g.digest());
  return replay_certificate(g, cert).ok;
}

/// The graph left after applying the deletions of `cert`.
template <class V>
Graph<V> residual(const Graph<V>& g, const Certificate<V>& cert) {
  Bits keep(g.size());
  keep.set();
  for (const auto& s : cert.steps) keep.reset(g.index_of(s.deleted));
  return g.induced_by_mask(keep);
}

/// Turns a bare deletion order into a certificate by finding, at each
/// step, the smallest live witness.  Nothing if some step has none.
template <class V>
std::optional<Certificate<V>> certify_sequence(const Graph<V>& g,
                                               const std::vector<V>& order) {
  detail::ResidualGraph<V> r(g);
  std::vector<std::pair<std::size_t, std::size_t>> steps;
  for (const auto& v : order) {
    auto x = g.find(v);
    if (!x || !r.alive(*x)) return std::nullopt;
    auto a = r.first_witness(*x);
    if (!a) return std::nullopt;
    steps.emplace_back(*x, *a);
    r.erase(*x);
  }
  return detail::make_graph_certificate(g, steps);
}

}  // namespace dismantle

#endif  // DISMANTLE_GRAPH_CORE_HPP
