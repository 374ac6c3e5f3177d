#ifndef DISMANTLE_CERTIFICATE_HPP
#define DISMANTLE_CERTIFICATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dismantle/error.hpp"
#include "dismantle/label.hpp"

namespace dismantle {

enum class Category {
  graph,       // dominated vertices of a graph, open neighbourhoods
  poset,       // beat points: least strict upper / greatest strict lower bound
  weak_poset,  // weakly dominated elements (double-cone condition)
  complex      // strong collapses: link is a cone
};

inline const char* to_string(Category c) {
  switch (c) {
    case Category::graph: return "graph";
    case Category::poset: return "poset";
    case Category::weak_poset: return "weak_poset";
    case Category::complex: return "complex";
  }
  return "unknown";
}

inline Category category_from_string(const std::string& s) {
  if (s == "graph") return Category::graph;
  if (s == "poset") return Category::poset;
  if (s == "weak_poset") return Category::weak_poset;
  if (s == "complex") return Category::complex;
  fail(ErrorCode::input, "unknown certificate category '" + s + "'");
}

/// One deletion: `deleted` is removed, `witness` dominates it in the
/// residual object at that point of the sequence.
template <class T>
struct Step {
  T deleted;
  T witness;

  friend bool operator==(const Step&, const Step&) = default;
};

/// A dismantling sequence with witnesses, bound to its starting object by
/// digest.  Replaying the steps in order against that object must succeed.
template <class T>
struct Certificate {
  Category category = Category::graph;
  std::string start_digest;
  std::vector<Step<T>> steps;

  std::size_t size() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }

  std::vector<T> deleted() const {
    std::vector<T> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.deleted);
    return out;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Outcome of replaying a certificate.  `failed_step` is the index of the
/// first illegal step, if any.
struct Replay {
  bool ok = true;
  std::optional<std::size_t> failed_step;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }

  static Replay failure(std::size_t step, std::string why) {
    return Replay{false, step, std::move(why)};
  }
};

/// Result of a greedy reduction: the residual object and how it was reached.
template <class Object, class T>
struct Reduction {
  Object residual;
  Certificate<T> certificate;
};

template <class T>
json to_json(const Certificate<T>& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"deleted", label_json(s.deleted)},
                     {"witness", label_json(s.witness)}});
  }
  return {{"category", to_string(cert.category)},
          {"start_digest", cert.start_digest},
          {"steps", std::move(steps)}};
}

}  // namespace dismantle

#endif  // DISMANTLE_CERTIFICATE_HPP
