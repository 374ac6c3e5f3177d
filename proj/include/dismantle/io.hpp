#ifndef DISMANTLE_IO_HPP
#define DISMANTLE_IO_HPP

// Plain-text formats.  One directive per line, `#` starts a comment.
//
//   graph     v <id> [loop]      e <x> <y>      (e x x is also a loop)
//   poset     p <id>             c <x> <y>      (x is covered by y)
//   complex   f <v1> <v2> ...
//
// Vertices must be declared (v / p) before edges and covers use them.

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dismantle/certificate.hpp"
#include "dismantle/complex.hpp"
#include "dismantle/error.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/label.hpp"
#include "dismantle/poset.hpp"

namespace dismantle {

namespace detail {

struct Directive {
  std::size_t line;
  std::vector<std::string> words;
};

inline std::vector<Directive> tokenize(const std::string& text) {
  std::vector<Directive> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ws(raw);
    Directive d{line, {}};
    for (std::string w; ws >> w;) d.words.push_back(std::move(w));
    if (!d.words.empty()) out.push_back(std::move(d));
  }
  return out;
}

inline void expect_arity(const Directive& d, std::size_t n) {
  if (d.words.size() != n)
    throw ParseError(d.line, "'" + d.words[0] + "' expects " +
                                 std::to_string(n - 1) + " argument(s)");
}

// Declared ids in file order, with a lookup for use sites.
class Declarations {
 public:
  void declare(const Directive& d, const std::string& id) {
    if (!seen_.emplace(id, ids_.size()).second)
      throw ParseError(d.line, "'" + id + "' declared twice");
    ids_.emplace_back(id);
  }
  const Name& use(const Directive& d, const std::string& id) const {
    auto it = seen_.find(id);
    if (it == seen_.end())
      throw ParseError(d.line, "'" + id + "' used before declaration");
    return ids_[it->second];
  }
  const std::vector<Name>& ids() const { return ids_; }

 private:
  std::map<std::string, std::size_t> seen_;
  std::vector<Name> ids_;
};

inline std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace detail

inline Graph<Name> parse_graph(const std::string& text) {
  detail::Declarations decl;
  std::vector<std::pair<Name, Name>> edges;
  for (const auto& d : detail::tokenize(text)) {
    const auto& w = d.words;
    if (w[0] == "v") {
      if (w.size() == 3 && w[2] != "loop")
        throw ParseError(d.line, "expected 'loop', got '" + w[2] + "'");
      if (w.size() != 2 && w.size() != 3)
        throw ParseError(d.line, "'v' expects an id and an optional 'loop'");
      decl.declare(d, w[1]);
      if (w.size() == 3) edges.emplace_back(Name(w[1]), Name(w[1]));
    } else if (w[0] == "e") {
      detail::expect_arity(d, 3);
      edges.emplace_back(decl.use(d, w[1]), decl.use(d, w[2]));
    } else {
      throw ParseError(d.line, "unknown graph directive '" + w[0] + "'");
    }
  }
  return Graph<Name>(decl.ids(), edges);
}

inline Poset<Name> parse_poset(const std::string& text) {
  detail::Declarations decl;
  std::vector<std::pair<Name, Name>> covers;
  for (const auto& d : detail::tokenize(text)) {
    const auto& w = d.words;
    if (w[0] == "p") {
      detail::expect_arity(d, 2);
      decl.declare(d, w[1]);
    } else if (w[0] == "c") {
      detail::expect_arity(d, 3);
      covers.emplace_back(decl.use(d, w[1]), decl.use(d, w[2]));
    } else {
      throw ParseError(d.line, "unknown poset directive '" + w[0] + "'");
    }
  }
  return Poset<Name>::from_covers(decl.ids(), covers);
}

inline SimplicialComplex<Name> parse_complex(const std::string& text) {
  std::vector<Simplex<Name>> facets;
  for (const auto& d : detail::tokenize(text)) {
    const auto& w = d.words;
    if (w[0] != "f")
      throw ParseError(d.line, "unknown complex directive '" + w[0] + "'");
    if (w.size() < 2) throw ParseError(d.line, "'f' needs at least one vertex");
    Simplex<Name> f(w.begin() + 1, w.end());
    auto sorted = make_simplex(f);
    if (sorted.size() != f.size())
      throw ParseError(d.line, "repeated vertex in facet");
    facets.push_back(std::move(sorted));
  }
  return SimplicialComplex<Name>::from_facets(std::move(facets));
}

template <class V>
std::string serialize(const Graph<V>& g) {
  return detail::join_lines(g.canonical_lines());
}

template <class T>
std::string serialize(const Poset<T>& p) {
  return detail::join_lines(p.canonical_lines());
}

template <class T>
std::string serialize(const SimplicialComplex<T>& k) {
  return detail::join_lines(k.canonical_lines());
}

/// Relabels any object to Name by its label string, e.g. to write it out
/// and read it back.
template <class Object>
auto to_named(const Object& x) {
  return relabel(x, [](const auto& v) { return Name(label(v)); });
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::input, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads a certificate over Name labels.  Non-string labels are kept as
/// their compact JSON text.
inline Certificate<Name> certificate_from_json(const json& j) {
  auto name_of = [](const json& v) {
    return v.is_string() ? Name(v.get<std::string>()) : Name(v.dump());
  };
  try {
    Certificate<Name> cert;
    cert.category = category_from_string(j.at("category").get<std::string>());
    cert.start_digest = j.at("start_digest").get<std::string>();
    for (const auto& s : j.at("steps"))
      cert.steps.push_back({name_of(s.at("deleted")), name_of(s.at("witness"))});
    return cert;
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("bad certificate: ") + e.what());
  }
}

}  // namespace dismantle

#endif  // DISMANTLE_IO_HPP
