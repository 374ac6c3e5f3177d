#ifndef DISMANTLE_WORKED_EXAMPLES_HPP
#define DISMANTLE_WORKED_EXAMPLES_HPP

// The standard worked examples, replayed end to end.  P3 is the path
// 0 - 1 - 2, K3 the triangle on a, b, c; the twelve morphisms P3 -> K3 carry
// the letter names below.  Each check reports pass/fail with a detail line.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dismantle/dismantle.hpp"

namespace dismantle::examples {

using NGraph = Graph<Name>;
using Hom = Morphism<Name, Name>;
using Cell = IndexingFunction<Name, Name>;

inline NGraph p3() { return to_named(path_graph(3)); }

inline NGraph k3() {
  return NGraph({"a", "b", "c"},
                std::vector<std::pair<Name, Name>>{{"a", "b"}, {"b", "c"},
                                                   {"a", "c"}});
}

inline NGraph k2() {
  return NGraph({"0", "1"}, std::vector<std::pair<Name, Name>>{{"0", "1"}});
}

/// Letter name -> images of 0, 1, 2.
inline const std::vector<std::pair<char, std::string>>& morphism_table() {
  static const std::vector<std::pair<char, std::string>> table = {
      {'u', "aca"}, {'v', "bcb"}, {'w', "bab"}, {'x', "cac"},
      {'y', "cbc"}, {'z', "aba"}, {'f', "acb"}, {'g', "bca"},
      {'h', "bac"}, {'j', "cab"}, {'k', "abc"}, {'l', "cba"}};
  return table;
}

inline Hom named_morphism(char letter) {
  for (const auto& [c, img] : morphism_table())
    if (c == letter) {
      std::vector<Name> images;
      for (char ch : img) images.emplace_back(std::string(1, ch));
      return make_morphism(p3(), images);
    }
  fail(ErrorCode::input, std::string("no morphism named '") + letter + "'");
}

/// "fuv" -> the clique {f, u, v} as a sorted simplex.
inline Simplex<Hom> named_clique(const std::string& letters) {
  std::vector<Hom> ms;
  for (char c : letters) ms.push_back(named_morphism(c));
  return make_simplex(std::move(ms));
}

/// "fu" -> Phi({f, u}).
inline Cell named_cell(const std::string& letters) {
  auto c = named_clique(letters);
  return phi(p3(), k3(), c);
}

/// Cell from value strings, e.g. {"ab", "c", "ab"}.
inline Cell cell_from_values(const std::vector<std::string>& values) {
  Cell eta;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::vector<Name> ys;
    for (char ch : values[i]) ys.emplace_back(std::string(1, ch));
    eta.assignment.emplace_back(Name(static_cast<long long>(i)),
                                make_simplex(std::move(ys)));
  }
  return eta;
}

inline std::vector<std::string> clique_sequence() {
  return {"fuv", "guv", "fgu", "fgv", "fg", "uv", "hwx", "jwx", "hjw",
          "hjx", "wx",  "hj",  "kyz", "lyz", "kly", "klz", "yz", "kl"};
}

/// Twelve numbered edge cells, then the vertex cells f, g, h, j, k, l.
inline std::vector<std::string> face_graph_sequence() {
  return {"fu", "gu", "fv", "gv", "hw", "jw", "hx", "jx", "ky",
          "ly", "kz", "lz", "f",  "g",  "h",  "j",  "k",  "l"};
}

inline Poset<Name> diamond() {
  return Poset<Name>::from_covers(
      {"a", "b", "c", "d"},
      std::vector<std::pair<Name, Name>>{
          {"d", "b"}, {"d", "c"}, {"b", "a"}, {"c", "a"}});
}

struct ExampleCheck {
  std::string id;
  std::string claim;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline ExampleCheck run_check(std::string id, std::string claim,
                              const std::function<std::string()>& body) {
  ExampleCheck c{std::move(id), std::move(claim), false, {}};
  try {
    c.detail = body();
    c.ok = c.detail.empty();
    if (c.ok) c.detail = "ok";
  } catch (const std::exception& e) {
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

inline std::string expect(bool cond, const std::string& what) {
  return cond ? std::string() : what;
}

}  // namespace detail

inline std::vector<ExampleCheck> run_worked_examples() {
  using detail::expect;
  std::vector<ExampleCheck> out;
  auto add = [&](std::string id, std::string claim,
                 std::function<std::string()> body) {
    out.push_back(detail::run_check(std::move(id), std::move(claim), body));
  };
  const auto g = p3();
  const auto h = k3();

  add("p3-domination", "2 is dominated by 0 in P3",
      [&] { return expect(dominates(g, Name("0"), Name("2")), "no"); });

  add("p3-fold", "P3 dismantles onto P3 - 2 = K2 by the step (2, 0)", [&] {
    auto c = dismantles_onto(g, std::vector<Name>{"0", "1"});
    if (!c) return std::string("no certificate");
    if (c->steps != std::vector<Step<Name>>{{"2", "0"}})
      return "unexpected certificate " + to_json(*c).dump();
    if (!verify_certificate(g, *c)) return std::string("does not verify");
    return expect(fold(g, Name("2"), Name("0")) == k2(), "fold is not K2");
  });

  add("p3-core", "the stiff core of P3 is K2", [&] {
    auto r = dismantle_core(g);
    return expect(are_isomorphic(r.residual, k2()).has_value() &&
                      is_stiff(r.residual) && verify_certificate(g, r.certificate),
                  "core differs");
  });

  add("morphisms", "there are 12 morphisms P3 -> K3, u..l as tabulated", [&] {
    auto ms = enumerate_morphisms(g, h);
    std::vector<Hom> table;
    for (const auto& [c, img] : morphism_table())
      table.push_back(named_morphism(c));
    std::sort(table.begin(), table.end());
    return expect(ms == table, "morphism list differs from the table");
  });

  add("hom-graph", "hom(P3, K3): 4-cliques fguv, hjwx, klyz plus uz, vw, xy",
      [&] {
        auto hg = hom_graph(g, h);
        std::vector<std::pair<Hom, Hom>> expected;
        for (std::string q : {"fguv", "hjwx", "klyz"})
          for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
              expected.emplace_back(named_morphism(q[i]),
                                    named_morphism(q[j]));
        for (std::string e : {"uz", "vw", "xy"})
          expected.emplace_back(named_morphism(e[0]), named_morphism(e[1]));
        for (auto& [p, q] : expected)
          if (q < p) std::swap(p, q);
        for (const auto& m : hg.vertices()) expected.emplace_back(m, m);
        std::sort(expected.begin(), expected.end());
        auto actual = hg.edges();
        std::sort(actual.begin(), actual.end());
        return expect(actual == expected, "edge set differs");
      });

  add("adjacency", "u and f are adjacent in hom(P3, K3)", [&] {
    return expect(morphisms_adjacent(g, h, named_morphism('u'),
                                     named_morphism('f')),
                  "not adjacent");
  });

  add("sdr", "the fold 2 -> 0 gives a homotopy 1 ~ r from P3 to itself", [&] {
    auto c = *dismantles_onto(g, std::vector<Name>{"0", "1"});
    auto hs = sdr_homotopy(g, c);
    if (hs.size() != 2) return std::string("expected two maps");
    if (!(hs[0] == identity_morphism(g))) return std::string("H0 is not 1");
    if (!(hs[1] == fold_retraction(g, Name("2"), Name("0"))))
      return std::string("H1 is not the retraction");
    return expect(morphisms_adjacent(g, g, hs[0], hs[1]), "not adjacent");
  });

  add("cycles", "reflexive cycles C4..C8 are stiff and pairwise inequivalent",
      [&] {
        for (int n = 4; n <= 8; ++n) {
          if (!is_stiff(cycle_graph(n, true)))
            return "C" + std::to_string(n) + " is not stiff";
          for (int m = n + 1; m <= 8; ++m)
            if (same_d_homotopy_type(cycle_graph(n, true),
                                     cycle_graph(m, true)))
              return "C" + std::to_string(n) + " ~ C" + std::to_string(m);
        }
        return expect(same_d_homotopy_type(cycle_graph(3, true),
                                           complete_graph(1, true)),
                      "C3 is not equivalent to a looped point");
      });

  add("diamond", "a, d are not dismantlable in P but are in Comp(P)", [&] {
    auto p = diamond();
    for (const auto& e : dismantlable_elements(p))
      if (e.element == Name("a") || e.element == Name("d"))
        return "'" + e.element.str() + "' is dismantlable";
    auto weak = weakly_dismantlable_elements(p);
    if (std::find(weak.begin(), weak.end(), Step<Name>{"d", "a"}) ==
        weak.end())
      return std::string("d is not weakly dominated by a");
    auto cg = comp(p);
    if (!dominates(cg, Name("a"), Name("d")))
      return std::string("a does not dominate d in Comp(P)");
    return expect(cg.edge_count() == 4 + 5, "Comp(P) is not C4 plus a-d");
  });

  add("atoms-graph", "m(C(G)) = G with loops, for P3, C4 reflexive, C5", [&] {
    for (const auto& gr : {path_graph(3), cycle_graph(4, true), cycle_graph(5)})
      if (!(identify_singletons(atoms_graph(clique_poset(gr))) ==
            reflexive_closure(gr)))
        return std::string("mismatch");
    return std::string();
  });

  add("phi", "Phi(fguv) = (ab | c | ab), Phi(uz) = (a | bc | a)", [&] {
    if (!(named_cell("fguv") == cell_from_values({"ab", "c", "ab"})))
      return std::string("Phi(fguv) = ") + label(named_cell("fguv"));
    return expect(named_cell("uz") == cell_from_values({"a", "bc", "a"}),
                  "Phi(uz) = " + label(named_cell("uz")));
  });

  add("clique-sequence",
      "fuv, guv, ..., kl dismantles C(hom(P3, K3)) onto F_P(Hom(P3, K3))",
      [&] {
        auto cp = clique_poset(hom_graph(g, h));
        std::vector<Simplex<Hom>> order;
        for (const auto& s : clique_sequence()) order.push_back(named_clique(s));
        auto c = certify_sequence(cp, order);
        if (!c) return std::string("sequence is not a dismantling");
        if (!verify_certificate(cp, *c)) return std::string("no verify");
        auto rest = residual(cp, *c);
        auto as_cells = relabel(rest, [&](const Simplex<Hom>& s) {
          return phi(g, h, s);
        });
        if (!(as_cells == hom_face_poset(g, h)))
          return std::string("residual is not F_P(Hom(P3, K3))");
        auto ours = clique_to_cell_dismantle(g, h);
        if (ours.certificate.size() != 18)
          return "fixed-point certificate has " +
                 std::to_string(ours.certificate.size()) + " steps";
        return expect(ours.residual == rest &&
                          verify_certificate(cp, ours.certificate),
                      "fixed-point dismantling differs");
      });

  add("face-graph-sequence",
      "cells 1..12 then f, g, h, j, k, l dismantle F_G(Hom(P3, K3)) onto "
      "F_G(Hom(K2, K3))",
      [&] {
        auto d = fold_induced_hom_dismantle(g, h, HomSide::source, Name("2"),
                                            Name("0"));
        if (d.face_graph.size() != 30 || d.embedding.size() != 12)
          return std::string("unexpected sizes");
        if (d.certificate.size() != 18 ||
            !verify_certificate(d.face_graph, d.certificate))
          return std::string("greedy certificate is not 18 legal steps");
        std::vector<Cell> order;
        for (const auto& s : face_graph_sequence()) order.push_back(named_cell(s));
        auto c = certify_sequence(d.face_graph, order);
        if (!c) return std::string("stated order is not a dismantling");
        std::vector<Cell> image;
        for (const auto& [from, to] : d.embedding) image.push_back(to);
        return expect(residual(d.face_graph, *c) == d.face_graph.induced(image),
                      "stated order does not end at the embedded copy");
      });

  add("hexagon", "F_G(Hom(K2, K3)) is a stiff graph", [&] {
    auto fg = hom_face_graph(k2(), h);
    return expect(fg.size() == 12 && is_stiff(fg), "not a stiff 12-vertex graph");
  });

  return out;
}

}  // namespace dismantle::examples

#endif  // DISMANTLE_WORKED_EXAMPLES_HPP
