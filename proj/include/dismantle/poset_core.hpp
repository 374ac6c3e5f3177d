#ifndef DISMANTLE_POSET_CORE_HPP
#define DISMANTLE_POSET_CORE_HPP

// Dismantlable (beat) and weakly dismantlable elements of finite posets.
//
// x is dismantlable when P_{>x} has a least element or P_{<x} has a
// greatest element; that element is the witness.  x is weakly dominated by
// a when a is comparable to x and to everything comparable to x.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dismantle/certificate.hpp"
#include "dismantle/error.hpp"
#include "dismantle/poset.hpp"

namespace dismantle {

enum class Direction { up, down };

inline const char* to_string(Direction d) {
  return d == Direction::up ? "up" : "down";
}

enum class PosetMode { strict, weak };

template <class T>
struct PosetDomination {
  T element;
  T witness;
  Direction direction;

  friend bool operator==(const PosetDomination&,
                         const PosetDomination&) = default;
};

/// Order-preserving self-map, stored as (x, f(x)) pairs sorted by x.
template <class T>
struct MonotoneMap {
  std::vector<std::pair<T, T>> assignment;

  const T& operator()(const T& x) const {
    auto it = std::lower_bound(
        assignment.begin(), assignment.end(), x,
        [](const std::pair<T, T>& p, const T& key) { return p.first < key; });
    if (it == assignment.end() || !(it->first == x))
      fail(ErrorCode::input, "map is not defined on '" + label(x) + "'");
    return it->second;
  }
};

template <class T, class Fn>
MonotoneMap<T> make_monotone_map(const Poset<T>& p, Fn fn) {
  MonotoneMap<T> f;
  for (const auto& x : p.elements()) f.assignment.emplace_back(x, fn(x));
  return f;
}

namespace detail {

template <class T>
class ResidualPoset {
 public:
  explicit ResidualPoset(const Poset<T>& p) : p_(&p), alive_(p.size()) {
    alive_.set();
  }

  const Poset<T>& poset() const { return *p_; }
  const Bits& alive() const { return alive_; }
  bool alive(std::size_t i) const { return alive_[i]; }
  void erase(std::size_t i) { alive_.reset(i); }

  /// Least element of the live strict upper set of x.
  std::optional<std::size_t> least_above(std::size_t x) const {
    Bits up = p_->above(x) & alive_;
    for (auto a = up.find_first(); a != Bits::npos; a = up.find_next(a)) {
      Bits rest = up;
      rest.reset(a);
      if (rest.is_subset_of(p_->above(a))) return a;
    }
    return std::nullopt;
  }

  /// Greatest element of the live strict lower set of x.
  std::optional<std::size_t> greatest_below(std::size_t x) const {
    Bits down = p_->below(x) & alive_;
    for (auto a = down.find_first(); a != Bits::npos; a = down.find_next(a)) {
      Bits rest = down;
      rest.reset(a);
      if (rest.is_subset_of(p_->below(a))) return a;
    }
    return std::nullopt;
  }

  bool strictly_dominates(std::size_t a, std::size_t x) const {
    if (a == x || !alive_[a] || !alive_[x]) return false;
    auto up = least_above(x);
    if (up && *up == a) return true;
    auto down = greatest_below(x);
    return down && *down == a;
  }

  Bits comparable_set(std::size_t i) const {
    Bits c = p_->above(i) | p_->below(i);
    c.set(i);
    return c & alive_;
  }

  bool weakly_dominates(std::size_t a, std::size_t x) const {
    if (a == x || !alive_[a] || !alive_[x]) return false;
    if (!p_->comparable_at(a, x)) return false;
    Bits ca = p_->above(a) | p_->below(a);
    ca.set(a);
    return comparable_set(x).is_subset_of(ca);
  }

  std::optional<std::size_t> first_witness(std::size_t x,
                                           PosetMode mode) const {
    if (mode == PosetMode::strict) {
      if (auto a = least_above(x)) return a;
      return greatest_below(x);
    }
    for (auto a = alive_.find_first(); a != Bits::npos;
         a = alive_.find_next(a))
      if (weakly_dominates(a, x)) return a;
    return std::nullopt;
  }

  bool dominates(std::size_t a, std::size_t x, PosetMode mode) const {
    return mode == PosetMode::strict ? strictly_dominates(a, x)
                                     : weakly_dominates(a, x);
  }

 private:
  const Poset<T>* p_;
  Bits alive_;
};

inline Category category_of(PosetMode mode) {
  return mode == PosetMode::strict ? Category::poset : Category::weak_poset;
}

}  // namespace detail

/// Dismantlable elements with their witnesses, ascending by element; an
/// element with both an up and a down witness is listed twice, up first.
template <class T>
std::vector<PosetDomination<T>> dismantlable_elements(const Poset<T>& p) {
  detail::ResidualPoset<T> r(p);
  std::vector<PosetDomination<T>> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (auto a = r.least_above(x))
      out.push_back({p.element(x), p.element(*a), Direction::up});
    if (auto a = r.greatest_below(x))
      out.push_back({p.element(x), p.element(*a), Direction::down});
  }
  return out;
}

/// All (x, a) with x weakly dominated by a, ascending in x then a.
template <class T>
std::vector<Step<T>> weakly_dismantlable_elements(const Poset<T>& p) {
  detail::ResidualPoset<T> r(p);
  std::vector<Step<T>> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t a = 0; a < p.size(); ++a)
      if (r.weakly_dominates(a, x)) out.push_back({p.element(x), p.element(a)});
  return out;
}

/// Greedily deletes dismantlable (strict) or weakly dismantlable (weak)
/// elements, smallest first, until none is left.
template <class T>
Reduction<Poset<T>, T> poset_core(const Poset<T>& p,
                                  PosetMode mode = PosetMode::strict) {
  detail::ResidualPoset<T> r(p);
  Certificate<T> cert;
  cert.category = detail::category_of(mode);
  cert.start_digest = p.digest();
  for (bool progress = true; progress;) {
    progress = false;
    for (auto x = r.alive().find_first(); x != Bits::npos;
         x = r.alive().find_next(x)) {
      if (auto a = r.first_witness(x, mode)) {
        cert.steps.push_back({p.element(x), p.element(*a)});
        r.erase(x);
        progress = true;
        break;
      }
    }
  }
  return {p.induced_by_mask(r.alive()), std::move(cert)};
}

template <class T>
Replay replay_certificate(const Poset<T>& p, const Certificate<T>& cert) {
  PosetMode mode;
  if (cert.category == Category::poset) {
    mode = PosetMode::strict;
  } else if (cert.category == Category::weak_poset) {
    mode = PosetMode::weak;
  } else {
    return Replay::failure(0, "certificate category is not a poset category");
  }
  detail::ResidualPoset<T> r(p);
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& s = cert.steps[k];
    auto x = p.find(s.deleted);
    auto a = p.find(s.witness);
    if (!x || !a) return Replay::failure(k, "step names an unknown element");
    if (!r.alive(*x) || !r.alive(*a))
      return Replay::failure(k, "step names an element already deleted");
    if (!r.dominates(*a, *x, mode))
      return Replay::failure(k, "'" + label(s.deleted) +
                                    "' is not dominated by '" +
                                    label(s.witness) + "'");
    r.erase(*x);
  }
  return {};
}

template <class T>
bool verify_certificate(const Poset<T>& p, const Certificate<T>& cert) {
  if (cert.start_digest != p.digest())
    fail(ErrorCode::stale_certificate,
         "certificate digest " + cert.start_digest +
             " does not match poset digest " + p.digest());
  return replay_certificate(p, cert).ok;
}

template <class T>
Poset<T> residual(const Poset<T>& p, const Certificate<T>& cert) {
  Bits keep(p.size());
  keep.set();
  for (const auto& s : cert.steps) keep.reset(p.index_of(s.deleted));
  return p.induced_by_mask(keep);
}

/// Certificate for a bare deletion order, choosing the first witness at
/// each step; nothing if some element is not dismantlable when reached.
template <class T>
std::optional<Certificate<T>> certify_sequence(
    const Poset<T>& p, const std::vector<T>& order,
    PosetMode mode = PosetMode::strict) {
  detail::ResidualPoset<T> r(p);
  Certificate<T> cert;
  cert.category = detail::category_of(mode);
  cert.start_digest = p.digest();
  for (const auto& v : order) {
    auto x = p.find(v);
    if (!x || !r.alive(*x)) return std::nullopt;
    auto a = r.first_witness(*x, mode);
    if (!a) return std::nullopt;
    cert.steps.push_back({v, p.element(*a)});
    r.erase(*x);
  }
  return cert;
}

/// Dismantling of P onto Fix(f) for a monotone f with f <= 1 or f >= 1.
///
/// For f <= 1: a minimal x outside Fix(f) has f(x) as greatest element of
/// P_{<x}; delete it and redirect every y with f(y) = x to f(x).  The
/// adjusted map is still monotone, below the identity, with the same fixed
/// points.  The case f >= 1 is dual (maximal x, least upper witness).
template <class T>
Certificate<T> fixpoint_dismantle(const Poset<T>& p, const MonotoneMap<T>& f) {
  const std::size_t n = p.size();
  if (f.assignment.size() != n)
    fail(ErrorCode::input, "map must be defined on every element");
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(f.assignment[i].first == p.element(i)))
      fail(ErrorCode::input, "map domain differs from the poset");
    auto j = p.find(f.assignment[i].second);
    if (!j)
      fail(ErrorCode::input, "map value '" + label(f.assignment[i].second) +
                                 "' is not in the poset");
    img[i] = *j;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (auto j = p.above(i).find_first(); j != Bits::npos;
         j = p.above(i).find_next(j))
      if (!(img[i] == img[j] || p.less_at(img[i], img[j])))
        fail(ErrorCode::input, "map is not monotone at '" +
                                   label(p.element(i)) + "' < '" +
                                   label(p.element(j)) + "'");
  bool below_identity = true, above_identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (img[i] == i) continue;
    if (!p.less_at(img[i], i)) below_identity = false;
    if (!p.less_at(i, img[i])) above_identity = false;
  }
  if (!below_identity && !above_identity)
    fail(ErrorCode::precondition,
         "map is neither below nor above the identity");

  detail::ResidualPoset<T> r(p);
  Certificate<T> cert;
  cert.category = Category::poset;
  cert.start_digest = p.digest();
  auto moved = [&](std::size_t i) { return r.alive(i) && img[i] != i; };

  for (;;) {
    std::optional<std::size_t> pick;
    for (std::size_t x = 0; x < n && !pick; ++x) {
      if (!moved(x)) continue;
      const Bits& toward = below_identity ? p.below(x) : p.above(x);
      bool extremal = true;
      for (auto y = toward.find_first(); y != Bits::npos && extremal;
           y = toward.find_next(y))
        if (moved(y)) extremal = false;
      if (extremal) pick = x;
    }
    if (!pick) break;
    const std::size_t x = *pick, a = img[x];
    auto expected = below_identity ? r.greatest_below(x) : r.least_above(x);
    if (!expected || *expected != a)
      fail(ErrorCode::internal, "fixed-point witness is not extremal");
    cert.steps.push_back({p.element(x), p.element(a)});
    r.erase(x);
    for (std::size_t y = 0; y < n; ++y)
      if (r.alive(y) && img[y] == x) img[y] = a;
  }
  return cert;
}

/// Fix(f) as a subposet.
template <class T>
Poset<T> fixed_points(const Poset<T>& p, const MonotoneMap<T>& f) {
  std::vector<T> keep;
  for (const auto& [x, y] : f.assignment)
    if (x == y) keep.push_back(x);
  return p.induced(keep);
}

}  // namespace dismantle

#endif  // DISMANTLE_POSET_CORE_HPP
