#ifndef DISMANTLE_COMPLEX_HPP
#define DISMANTLE_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dismantle/error.hpp"
#include "dismantle/label.hpp"

namespace dismantle {

/// A simplex is a sorted, duplicate-free vertex list.
template <class T>
using Simplex = std::vector<T>;

template <class T>
Simplex<T> make_simplex(std::vector<T> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

template <class T>
bool is_face(const Simplex<T>& sigma, const Simplex<T>& tau) {
  return std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end());
}

/// Finite abstract simplicial complex stored by its facets.  The full set
/// of nonempty simplices is built on first use and shared between copies.
template <class T>
class SimplicialComplex {
 public:
  using vertex_type = T;

  SimplicialComplex() : cache_(std::make_shared<Cache>()) {}

  /// Facets must be nonempty and pairwise incomparable under inclusion.
  static SimplicialComplex from_facets(std::vector<Simplex<T>> facets) {
    for (auto& f : facets) {
      f = make_simplex(std::move(f));
      if (f.empty()) fail(ErrorCode::validation, "empty facet");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (std::size_t j = 0; j < facets.size(); ++j)
        if (i != j && is_face(facets[i], facets[j]))
          fail(ErrorCode::validation, "facet " + label(facets[i]) +
                                          " is contained in facet " +
                                          label(facets[j]));
    return SimplicialComplex(std::move(facets));
  }

  /// The downward closure of an arbitrary family of simplices.
  static SimplicialComplex from_simplices(std::vector<Simplex<T>> simplices) {
    for (auto& s : simplices) s = make_simplex(std::move(s));
    std::erase_if(simplices, [](const auto& s) { return s.empty(); });
    // Larger simplices first so that a face is always checked against its
    // possible cofaces.
    std::sort(simplices.begin(), simplices.end(),
              [](const auto& a, const auto& b) {
                return a.size() != b.size() ? a.size() > b.size() : a < b;
              });
    simplices.erase(std::unique(simplices.begin(), simplices.end()),
                    simplices.end());
    std::vector<Simplex<T>> facets;
    for (auto& s : simplices) {
      bool maximal = true;
      for (const auto& f : facets)
        if (f.size() > s.size() && is_face(s, f)) {
          maximal = false;
          break;
        }
      if (maximal) facets.push_back(std::move(s));
    }
    std::sort(facets.begin(), facets.end());
    return SimplicialComplex(std::move(facets));
  }

  const std::vector<Simplex<T>>& facets() const noexcept { return facets_; }
  const std::vector<T>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return facets_.empty(); }

  bool has_vertex(const T& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  void require_vertex(const T& v) const {
    if (!has_vertex(v))
      fail(ErrorCode::input, "unknown vertex '" + label(v) + "'");
  }

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& f : facets_) d = std::max(d, f.size());
    return d == 0 ? 0 : d - 1;
  }

  bool contains(const Simplex<T>& s) const {
    if (s.empty()) return true;
    for (const auto& f : facets_)
      if (is_face(s, f)) return true;
    return false;
  }

  /// All nonempty simplices, sorted lexicographically.  Thread-safe.
  const std::vector<Simplex<T>>& simplices() const {
    std::call_once(cache_->once, [this] {
      std::set<Simplex<T>> all;
      for (const auto& f : facets_) {
        if (f.size() >= 8 * sizeof(unsigned long long) - 1)
          fail(ErrorCode::resource, "facet too large to enumerate faces");
        const unsigned long long count = 1ULL << f.size();
        for (unsigned long long mask = 1; mask < count; ++mask) {
          Simplex<T> s;
          for (std::size_t i = 0; i < f.size(); ++i)
            if (mask & (1ULL << i)) s.push_back(f[i]);
          all.insert(std::move(s));
        }
      }
      cache_->simplices.assign(all.begin(), all.end());
    });
    return cache_->simplices;
  }

  /// K - x : simplices avoiding x.
  SimplicialComplex deletion(const T& x) const {
    require_vertex(x);
    std::vector<Simplex<T>> out;
    for (const auto& f : facets_) {
      Simplex<T> g;
      for (const auto& v : f)
        if (!(v == x)) g.push_back(v);
      out.push_back(std::move(g));
    }
    return from_simplices(std::move(out));
  }

  /// Subcomplex induced on a vertex subset (iterated deletions).
  SimplicialComplex induced(const std::vector<T>& keep_in) const {
    auto keep = make_simplex(keep_in);
    for (const auto& v : keep) require_vertex(v);
    std::vector<Simplex<T>> out;
    for (const auto& f : facets_) {
      Simplex<T> g;
      std::set_intersection(f.begin(), f.end(), keep.begin(), keep.end(),
                            std::back_inserter(g));
      out.push_back(std::move(g));
    }
    return from_simplices(std::move(out));
  }

  /// lk(x) = {sigma : x not in sigma, sigma + x in K}.  The link of an
  /// isolated vertex is the empty complex.
  SimplicialComplex link(const T& x) const {
    require_vertex(x);
    std::vector<Simplex<T>> out;
    for (const auto& f : facets_) {
      if (!std::binary_search(f.begin(), f.end(), x)) continue;
      Simplex<T> g;
      for (const auto& v : f)
        if (!(v == x)) g.push_back(v);
      out.push_back(std::move(g));
    }
    return from_simplices(std::move(out));
  }

  /// star(x) = {sigma : sigma + x in K}, as a complex.
  SimplicialComplex star(const T& x) const {
    require_vertex(x);
    std::vector<Simplex<T>> out;
    for (const auto& f : facets_)
      if (std::binary_search(f.begin(), f.end(), x)) out.push_back(f);
    return from_simplices(std::move(out));
  }

  /// Open star {sigma : x in sigma}; not closed under faces.
  std::vector<Simplex<T>> open_star(const T& x) const {
    require_vertex(x);
    std::vector<Simplex<T>> out;
    for (const auto& s : simplices())
      if (std::binary_search(s.begin(), s.end(), x)) out.push_back(s);
    return out;
  }

  std::vector<std::string> canonical_lines() const {
    std::vector<std::string> lines;
    for (const auto& f : facets_) {
      std::string line = "f";
      for (const auto& v : f) line += " " + label(v);
      lines.push_back(std::move(line));
    }
    return lines;
  }

  std::string digest() const {
    std::vector<std::string> lines;
    for (const auto& f : facets_) {
      std::vector<std::string> names;
      for (const auto& v : f) names.push_back(label(v));
      std::sort(names.begin(), names.end());
      std::string line = "f";
      for (const auto& s : names) line += " " + s;
      lines.push_back(std::move(line));
    }
    lines.push_back("#complex");
    return digest_lines(std::move(lines));
  }

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Simplex<T>> simplices;
  };

  explicit SimplicialComplex(std::vector<Simplex<T>> facets)
      : facets_(std::move(facets)), cache_(std::make_shared<Cache>()) {
    for (const auto& f : facets_)
      vertices_.insert(vertices_.end(), f.begin(), f.end());
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
  }

  std::vector<Simplex<T>> facets_;
  std::vector<T> vertices_;
  std::shared_ptr<Cache> cache_;
};

template <class T, class Fn>
auto relabel(const SimplicialComplex<T>& k, Fn fn) {
  using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
  std::vector<Simplex<U>> facets;
  for (const auto& f : k.facets()) {
    Simplex<U> g;
    for (const auto& v : f) g.push_back(fn(v));
    facets.push_back(make_simplex(std::move(g)));
  }
  return SimplicialComplex<U>::from_facets(std::move(facets));
}

/// The full simplex on 0..n-1.
inline SimplicialComplex<int> full_simplex(int n) {
  Simplex<int> s;
  for (int i = 0; i < n; ++i) s.push_back(i);
  return SimplicialComplex<int>::from_facets({s});
}

/// Boundary of the n-1 simplex on 0..n-1 (all facets of size n-1).
inline SimplicialComplex<int> simplex_boundary(int n) {
  std::vector<Simplex<int>> facets;
  for (int skip = 0; skip < n; ++skip) {
    Simplex<int> s;
    for (int i = 0; i < n; ++i)
      if (i != skip) s.push_back(i);
    facets.push_back(s);
  }
  return SimplicialComplex<int>::from_facets(std::move(facets));
}

}  // namespace dismantle

#endif  // DISMANTLE_COMPLEX_HPP
