#ifndef DISMANTLE_COMPLEX_CORE_HPP
#define DISMANTLE_COMPLEX_CORE_HPP

// Dominated vertices and strong collapses of simplicial complexes.
//
// x is dominated by a when lk(x) is a simplicial cone with apex a.
// Deleting a dominated vertex is an elementary strong collapse.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dismantle/certificate.hpp"
#include "dismantle/complex.hpp"
#include "dismantle/error.hpp"

namespace dismantle {

/// The smallest vertex contained in every facet.  A single vertex is a cone
/// over nothing; the empty complex is not a cone.
template <class T>
std::optional<T> is_simplicial_cone(const SimplicialComplex<T>& k) {
  if (k.empty()) return std::nullopt;
  for (const auto& v : k.vertices()) {
    bool apex = std::all_of(k.facets().begin(), k.facets().end(),
                            [&](const Simplex<T>& f) {
                              return std::binary_search(f.begin(), f.end(), v);
                            });
    if (apex) return v;
  }
  return std::nullopt;
}

template <class T>
bool is_cone_with_apex(const SimplicialComplex<T>& k, const T& a) {
  if (k.empty()) return false;
  return std::all_of(k.facets().begin(), k.facets().end(),
                     [&](const Simplex<T>& f) {
                       return std::binary_search(f.begin(), f.end(), a);
                     });
}

template <class T>
bool dominates(const SimplicialComplex<T>& k, const T& a, const T& x) {
  if (a == x)
    fail(ErrorCode::input, "domination needs two distinct vertices");
  k.require_vertex(a);
  return is_cone_with_apex(k.link(x), a);
}

/// All (x, a) with lk(x) a cone with apex a, ascending in x then a.
template <class T>
std::vector<Step<T>> dominated_vertices(const SimplicialComplex<T>& k) {
  std::vector<Step<T>> out;
  for (const auto& x : k.vertices()) {
    auto lk = k.link(x);
    for (const auto& a : lk.vertices())
      if (is_cone_with_apex(lk, a)) out.push_back({x, a});
  }
  return out;
}

namespace detail {

template <class T>
std::optional<T> first_dominator(const SimplicialComplex<T>& k, const T& x) {
  auto lk = k.link(x);
  for (const auto& a : lk.vertices())
    if (is_cone_with_apex(lk, a)) return a;
  return std::nullopt;
}

template <class T>
Reduction<SimplicialComplex<T>, T> greedy_collapse(
    const SimplicialComplex<T>& k, const std::vector<T>& keep) {
  Certificate<T> cert;
  cert.category = Category::complex;
  cert.start_digest = k.digest();
  SimplicialComplex<T> cur = k;
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& x : cur.vertices()) {
      if (std::binary_search(keep.begin(), keep.end(), x)) continue;
      if (auto a = first_dominator(cur, x)) {
        cert.steps.push_back({x, *a});
        cur = cur.deletion(x);
        progress = true;
        break;
      }
    }
  }
  return {std::move(cur), std::move(cert)};
}

}  // namespace detail

/// Deletes dominated vertices (smallest first) until none is left.
template <class T>
Reduction<SimplicialComplex<T>, T> strong_collapse_core(
    const SimplicialComplex<T>& k) {
  return detail::greedy_collapse(k, {});
}

/// Certificate for K strongly collapsing onto L, or nothing.  L must be the
/// subcomplex of K induced on its own vertex set.
template <class T>
std::optional<Certificate<T>> strong_collapse_onto(
    const SimplicialComplex<T>& k, const SimplicialComplex<T>& l) {
  for (const auto& v : l.vertices())
    if (!k.has_vertex(v))
      fail(ErrorCode::input, "vertex '" + label(v) + "' of L is not in K");
  if (!(k.induced(l.vertices()) == l))
    fail(ErrorCode::input,
         "L is not the subcomplex of K induced on its vertices");
  auto red = detail::greedy_collapse(k, l.vertices());
  if (!(red.residual == l)) return std::nullopt;
  return std::move(red.certificate);
}

template <class T>
Replay replay_certificate(const SimplicialComplex<T>& k,
                          const Certificate<T>& cert) {
  if (cert.category != Category::complex)
    return Replay::failure(0, "certificate category is not complex");
  SimplicialComplex<T> cur = k;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    if (s.deleted == s.witness || !cur.has_vertex(s.deleted) ||
        !cur.has_vertex(s.witness))
      return Replay::failure(i, "step names a vertex not in the residual");
    if (!is_cone_with_apex(cur.link(s.deleted), s.witness))
      return Replay::failure(i, "link of '" + label(s.deleted) +
                                    "' is not a cone with apex '" +
                                    label(s.witness) + "'");
    cur = cur.deletion(s.deleted);
  }
  return {};
}

template <class T>
bool verify_certificate(const SimplicialComplex<T>& k,
                        const Certificate<T>& cert) {
  if (cert.start_digest != k.digest())
    fail(ErrorCode::stale_certificate,
         "certificate digest " + cert.start_digest +
             " does not match complex digest " + k.digest());
  return replay_certificate(k, cert).ok;
}

template <class T>
SimplicialComplex<T> residual(const SimplicialComplex<T>& k,
                              const Certificate<T>& cert) {
  SimplicialComplex<T> cur = k;
  for (const auto& s : cert.steps) cur = cur.deletion(s.deleted);
  return cur;
}

/// Certificate for a bare vertex deletion order, choosing the smallest
/// apex at each step; nothing if some vertex is not dominated when reached.
template <class T>
std::optional<Certificate<T>> certify_sequence(const SimplicialComplex<T>& k,
                                               const std::vector<T>& order) {
  Certificate<T> cert;
  cert.category = Category::complex;
  cert.start_digest = k.digest();
  SimplicialComplex<T> cur = k;
  for (const auto& x : order) {
    if (!cur.has_vertex(x)) return std::nullopt;
    auto a = detail::first_dominator(cur, x);
    if (!a) return std::nullopt;
    cert.steps.push_back({x, *a});
    cur = cur.deletion(x);
  }
  return cert;
}

/// Order in which the open star of a dominated vertex x (witness a) is
/// removed from the face graph, with a witness simplex for each deletion.
///
/// First the simplices containing x but not a, largest first, each
/// dominated by itself plus a.  Then the simplices containing x and a,
/// smallest first, each dominated by itself minus x.  Ties are broken
/// lexicographically.
template <class T>
std::vector<Step<Simplex<T>>> star_deletion_order(
    const SimplicialComplex<T>& k, const T& x, const T& a) {
  if (!dominates(k, a, x))
    fail(ErrorCode::domination, "vertex '" + label(x) +
                                    "' is not dominated by '" + label(a) +
                                    "'");
  std::vector<Simplex<T>> without_a, with_a;
  for (auto& s : k.open_star(x)) {
    if (std::binary_search(s.begin(), s.end(), a))
      with_a.push_back(std::move(s));
    else
      without_a.push_back(std::move(s));
  }
  std::sort(without_a.begin(), without_a.end(),
            [](const auto& p, const auto& q) {
              return p.size() != q.size() ? p.size() > q.size() : p < q;
            });
  std::sort(with_a.begin(), with_a.end(), [](const auto& p, const auto& q) {
    return p.size() != q.size() ? p.size() < q.size() : p < q;
  });
  std::vector<Step<Simplex<T>>> order;
  for (const auto& s : without_a) {
    Simplex<T> w = s;
    w.insert(std::lower_bound(w.begin(), w.end(), a), a);
    order.push_back({s, std::move(w)});
  }
  for (const auto& s : with_a) {
    Simplex<T> w;
    for (const auto& v : s)
      if (!(v == x)) w.push_back(v);
    order.push_back({s, std::move(w)});
  }
  return order;
}

}  // namespace dismantle

#endif  // DISMANTLE_COMPLEX_CORE_HPP
