#ifndef DISMANTLE_POSET_HPP
#define DISMANTLE_POSET_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dismantle/certificate.hpp"
#include "dismantle/error.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/label.hpp"

namespace dismantle {

/// Finite poset stored by its strict order relation (transitively closed).
/// Elements are kept sorted; subposets keep the ids of their elements.
template <class T>
class Poset {
 public:
  using element_type = T;

  Poset() = default;

  /// Builds the poset generated by covers x < y.  Throws a validation
  /// error if the covers contain a cycle.
  static Poset from_covers(std::vector<T> elements,
                           std::span<const std::pair<T, T>> covers) {
    Poset p;
    p.init(std::move(elements));
    for (const auto& [x, y] : covers) {
      const auto i = p.index_of(x), j = p.index_of(y);
      if (i == j)
        fail(ErrorCode::validation, "cover " + label(x) + " < " + label(y) +
                                        " is reflexive");
      p.above_[i].set(j);
    }
    p.close();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p.above_[i][i])
        fail(ErrorCode::validation, "order relation has a cycle through '" +
                                        label(p.elements_[i]) + "'");
    return p;
  }

  static Poset from_covers(std::vector<T> elements,
                           const std::vector<std::pair<T, T>>& covers) {
    return from_covers(std::move(elements),
                       std::span<const std::pair<T, T>>(covers));
  }

  /// Builds the poset with x < y iff `less(x, y)`.  The predicate must be a
  /// strict partial order; this is checked.
  template <class Less>
  static Poset from_relation(std::vector<T> elements, Less less) {
    Poset p;
    p.init(std::move(elements));
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && less(p.elements_[i], p.elements_[j])) p.above_[i].set(j);
    p.validate();
    return p;
  }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<T>& elements() const noexcept { return elements_; }
  const T& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> find(const T& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool contains(const T& x) const { return find(x).has_value(); }

  std::size_t index_of(const T& x) const {
    if (auto i = find(x)) return *i;
    fail(ErrorCode::input, "unknown element '" + label(x) + "'");
  }

  /// Strict upper set of position i, as a position mask.
  const Bits& above(std::size_t i) const { return above_[i]; }
  /// Strict lower set of position i.
  const Bits& below(std::size_t i) const { return below_[i]; }

  bool less_at(std::size_t i, std::size_t j) const { return above_[i][j]; }
  bool comparable_at(std::size_t i, std::size_t j) const {
    return i == j || above_[i][j] || below_[i][j];
  }

  bool less(const T& x, const T& y) const {
    return less_at(index_of(x), index_of(y));
  }
  bool less_equal(const T& x, const T& y) const {
    return x == y || less(x, y);
  }
  bool comparable(const T& x, const T& y) const {
    return comparable_at(index_of(x), index_of(y));
  }

  /// P_{>x}
  std::vector<T> up_set(const T& x) const { return pick(above_[index_of(x)]); }
  /// P_{<x}
  std::vector<T> down_set(const T& x) const {
    return pick(below_[index_of(x)]);
  }

  /// Minimal elements (P_{<p} empty).
  std::vector<T> atoms() const {
    std::vector<T> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (below_[i].none()) out.push_back(elements_[i]);
    return out;
  }

  std::vector<T> maximal_elements() const {
    std::vector<T> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (above_[i].none()) out.push_back(elements_[i]);
    return out;
  }

  /// Cover pairs x < y with nothing strictly between.
  std::vector<std::pair<T, T>> covers() const {
    std::vector<std::pair<T, T>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (auto j = above_[i].find_first(); j != Bits::npos;
           j = above_[i].find_next(j))
        if (!(above_[i] & below_[j]).any())
          out.emplace_back(elements_[i], elements_[j]);
    return out;
  }

  Poset induced_by_mask(const Bits& keep) const {
    std::vector<std::size_t> idx;
    for (auto i = keep.find_first(); i != Bits::npos; i = keep.find_next(i))
      idx.push_back(i);
    Poset p;
    for (auto i : idx) p.elements_.push_back(elements_[i]);
    const std::size_t n = idx.size();
    p.above_.assign(n, Bits(n));
    p.below_.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (above_[idx[a]][idx[b]]) {
          p.above_[a].set(b);
          p.below_[b].set(a);
        }
    return p;
  }

  Poset induced(const std::vector<T>& keep) const {
    Bits mask(size());
    for (const auto& x : keep) mask.set(index_of(x));
    return induced_by_mask(mask);
  }

  /// P \ {x}.
  Poset without(const T& x) const {
    Bits mask(size());
    mask.set();
    mask.reset(index_of(x));
    return induced_by_mask(mask);
  }

  /// Canonical text lines (`p <id>`, `c <x> <y>` for covers).
  std::vector<std::string> canonical_lines() const {
    std::vector<std::string> lines;
    for (const auto& x : elements_) lines.push_back("p " + label(x));
    for (const auto& [x, y] : covers())
      lines.push_back("c " + label(x) + " " + label(y));
    return lines;
  }

  std::string digest() const {
    auto lines = canonical_lines();
    lines.push_back("#poset");
    return digest_lines(std::move(lines));
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && a.above_ == b.above_;
  }

 private:
  void init(std::vector<T> elements) {
    elements_ = std::move(elements);
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    above_.assign(size(), Bits(size()));
  }

  // Warshall-style closure on bit rows, then derive the lower sets.
  void close() {
    const std::size_t n = size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (above_[i][k]) above_[i] |= above_[k];
    derive_below();
  }

  void derive_below() {
    const std::size_t n = size();
    below_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (auto j = above_[i].find_first(); j != Bits::npos;
           j = above_[i].find_next(j))
        below_[j].set(i);
  }

  void validate() {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (above_[i][i])
        fail(ErrorCode::validation, "relation is not irreflexive");
      for (auto j = above_[i].find_first(); j != Bits::npos;
           j = above_[i].find_next(j)) {
        if (above_[j][i])
          fail(ErrorCode::validation, "relation is not antisymmetric at '" +
                                          label(elements_[i]) + "'");
        if (!above_[j].is_subset_of(above_[i]))
          fail(ErrorCode::validation, "relation is not transitive at '" +
                                          label(elements_[i]) + "'");
      }
    }
    derive_below();
  }

  std::vector<T> pick(const Bits& mask) const {
    std::vector<T> out;
    for (auto i = mask.find_first(); i != Bits::npos; i = mask.find_next(i))
      out.push_back(elements_[i]);
    return out;
  }

  std::vector<T> elements_;
  std::vector<Bits> above_;  // above_[i][j] : i < j
  std::vector<Bits> below_;  // below_[i][j] : j < i
};

/// Maps every element through an injective `fn`.
template <class T, class Fn>
auto relabel(const Poset<T>& p, Fn fn) {
  using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
  std::vector<U> elems;
  std::vector<std::pair<U, U>> covers;
  for (const auto& x : p.elements()) elems.push_back(fn(x));
  for (const auto& [x, y] : p.covers()) covers.emplace_back(fn(x), fn(y));
  auto out = Poset<U>::from_covers(elems, covers);
  if (out.size() != p.size())
    fail(ErrorCode::input, "relabeling is not injective");
  return out;
}

/// Chain 0 < 1 < ... < n-1.
inline Poset<int> chain_poset(int n) {
  std::vector<int> elems;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    elems.push_back(i);
    if (i + 1 < n) covers.emplace_back(i, i + 1);
  }
  return Poset<int>::from_covers(elems, covers);
}

inline Poset<int> antichain_poset(int n) {
  std::vector<int> elems;
  for (int i = 0; i < n; ++i) elems.push_back(i);
  return Poset<int>::from_covers(elems, std::vector<std::pair<int, int>>{});
}

}  // namespace dismantle

#endif  // DISMANTLE_POSET_HPP
