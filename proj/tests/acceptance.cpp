// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dismantle/worked_examples.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace {

using namespace dismantle;
using namespace dismantle::examples;

// Every certificate produced here goes through the oracle with mutations.
struct CertificateLog {
  std::size_t checked = 0, failed = 0, mutations = 0;
  std::string first_failure;

  template <class Object, class T>
  void add(const Object& start, const Certificate<T>& c, const std::string& where) {
    auto r = oracle::check(start, c);
    ++checked;
    mutations += r.mutations;
    if (!r.ok() && failed++ == 0) first_failure = where;
  }
};

CertificateLog certs;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome morphism_count() {
  Outcome o;
  // Images of 0, 1, 2.
  const std::vector<std::string> table = {"aca", "bcb", "bab", "cac", "cbc", "aba",
                                          "acb", "bca", "bac", "cab", "abc", "cba"};
  std::set<std::vector<Name>> want;
  for (const auto& row : table) {
    std::vector<Name> images;
    for (char c : row) images.emplace_back(std::string(1, c));
    want.insert(images);
  }
  auto ms = enumerate_morphisms(p3(), k3());
  std::set<std::vector<Name>> got;
  for (const auto& f : ms) {
    std::vector<Name> images;
    for (const auto& [x, y] : f.assignment) images.push_back(y);
    got.insert(images);
  }
  o.require(ms.size() == 12, std::to_string(ms.size()) + " morphisms");
  o.require(got == want, "assignments differ from the table");
  o.detail = o.ok ? "12 morphisms, table matches" : o.detail;
  return o;
}

Outcome hom_census() {
  Outcome o;
  auto cells = hom_cells(p3(), k3());
  std::vector<int> by_rank(3);
  for (const auto& c : cells)
    if (c.dimension() < 3) ++by_rank[c.dimension()];
  std::set<std::vector<std::vector<Name>>> got;
  for (const auto& eta : cells) {
    std::vector<std::vector<Name>> row;
    for (const auto& [x, ys] : eta.assignment) row.push_back(ys);
    got.insert(row);
  }
  auto fp = hom_face_poset(p3(), k3());
  auto hg = hom_graph(p3(), k3());
  auto cp = clique_poset(hg);
  o.require(fp.size() == 30, std::to_string(fp.size()) + " cells");
  o.require(by_rank == std::vector<int>{12, 15, 3}, "rank counts differ");
  o.require(got == oracle::indexing_functions(p3(), k3()),
            "cells differ from brute-force indexing functions");
  o.require(cp.size() == 48 && oracle::cliques(hg).size() == 48,
            std::to_string(cp.size()) + " cliques");
  if (o.ok) o.detail = "30 cells (12/15/3) = oracle, 48 cliques";
  return o;
}

Outcome sequence_replay() {
  Outcome o;
  const auto g = p3();
  const auto h = k3();
  auto cp = clique_poset(hom_graph(g, h));
  std::vector<Clique<Name, Name>> order;
  for (const auto& s : clique_sequence()) order.push_back(named_clique(s));
  auto stated = certify_sequence(cp, order);
  o.require(stated.has_value(), "stated sequence is not a dismantling");
  if (!stated) return o;
  o.require(stated->size() == 18, "stated sequence length");
  certs.add(cp, *stated, "stated clique sequence");
  auto as_cells = [&](const Poset<Clique<Name, Name>>& p) {
    return relabel(p, [&](const Clique<Name, Name>& c) { return phi(g, h, c); });
  };
  auto fp = hom_face_poset(g, h);
  o.require(as_cells(residual(cp, *stated)) == fp,
            "stated residual is not F_P(Hom(P3, K3))");
  auto ours = clique_to_cell_dismantle(g, h);
  o.require(ours.certificate.size() == 18, "computed certificate length");
  o.require(verify_certificate(cp, ours.certificate), "computed certificate");
  certs.add(cp, ours.certificate, "clique_to_cell_dismantle");
  o.require(as_cells(ours.residual) == fp, "computed residual differs");
  if (o.ok) o.detail = "stated and computed 18-step certificates, residual F_P(Hom)";
  return o;
}

Outcome fold_induced() {
  Outcome o;
  auto r = fold_induced_hom_dismantle(p3(), k3(), HomSide::source, Name("2"), Name("0"));
  o.require(r.face_graph.size() == 30, "face graph size");
  o.require(r.embedding.size() == 12, "embedded copy size");
  o.require(r.certificate.size() == 18 && verify_certificate(r.face_graph, r.certificate),
            "computed certificate");
  certs.add(r.face_graph, r.certificate, "fold_induced_hom_dismantle");
  std::vector<Cell> order;
  for (const auto& s : face_graph_sequence()) order.push_back(named_cell(s));
  auto stated = certify_sequence(r.face_graph, order);
  o.require(stated.has_value(), "stated order is not a dismantling");
  if (stated) {
    certs.add(r.face_graph, *stated, "stated face graph order");
    std::vector<Cell> image;
    for (const auto& [from, to] : r.embedding) image.push_back(to);
    o.require(residual(r.face_graph, *stated) == r.face_graph.induced(image),
              "stated order does not end at the embedded copy");
  }
  auto hex = hom_face_graph(k2(), k3());
  o.require(hex.size() == 12 && is_stiff(hex), "F_G(Hom(K2, K3)) not stiff");
  if (o.ok) o.detail = "18 steps onto 12 embedded cells; stated order verifies; hexagon stiff";
  return o;
}

Outcome reflexive_cycles() {
  Outcome o;
  int pairs = 0;
  for (int n = 3; n <= 8; ++n) {
    if (n >= 4) o.require(is_stiff(cycle_graph(n, true)), "C" + std::to_string(n) + " not stiff");
    for (int m = n + 1; m <= 8; ++m) {
      ++pairs;
      o.require(!same_d_homotopy_type(cycle_graph(n, true), cycle_graph(m, true)),
                "C" + std::to_string(n) + " ~ C" + std::to_string(m));
    }
  }
  auto c3 = cycle_graph(3, true);
  o.require(same_d_homotopy_type(c3, complete_graph(1, true)), "C3 not ~ K1");
  auto r = dismantle_core(c3);
  certs.add(c3, r.certificate, "core of C3");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs distinct, C3 ~ K1, C4..C8 stiff";
  return o;
}

Outcome diamond_poset() {
  Outcome o;
  auto p = diamond();
  for (const auto& d : dismantlable_elements(p))
    o.require(d.element != Name("a") && d.element != Name("d"),
              "'" + label(d.element) + "' listed as dismantlable");
  auto w = weakly_dismantlable_elements(p);
  o.require(std::find(w.begin(), w.end(), Step<Name>{"d", "a"}) != w.end(),
            "(d, a) not weakly dismantlable");
  o.require(dominates(comp(p), Name("a"), Name("d")), "a does not dominate d in Comp(P)");
  for (auto mode : {PosetMode::strict, PosetMode::weak}) {
    auto r = poset_core(p, mode);
    certs.add(p, r.certificate, "diamond core");
  }
  if (o.ok) o.detail = "a, d not beat points; d weakly dominated by a; a dominates d in Comp";
  return o;
}

std::vector<props::Tally> tallies;

Outcome property_suites() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& suite : props::all_suites()) {
    tallies.push_back(suite());
    const auto& t = tallies.back();
    instances += t.instances;
    std::fprintf(stderr, "  %-28s instances %6zu  certificates %5zu  failures %zu\n",
                 t.name.c_str(), t.instances, t.certificates, t.failures);
    o.require(t.instances >= static_cast<std::size_t>(props::kRandomInstances),
              t.name + ": only " + std::to_string(t.instances) + " instances");
    o.require(t.ok(), t.name + ": " + t.first_failure);
  }
  if (o.ok)
    o.detail = std::to_string(tallies.size()) + " suites, " + std::to_string(instances) +
               " instances, 0 failures";
  return o;
}

Outcome certificate_integrity() {
  Outcome o;
  // Certificates from the worked examples and the cores of the sample shapes.
  for (const auto& g : {path_graph(4), cycle_graph(5, true), complete_graph(4, true)})
    certs.add(g, dismantle_core(g).certificate, "graph core");
  certs.add(full_simplex(4), strong_collapse_core(full_simplex(4)).certificate,
            "complex core");
  std::size_t checked = certs.checked, failed = certs.failed, mutations = certs.mutations;
  for (const auto& t : tallies) {
    checked += t.certificates;
    failed += t.certificate_failures;
    mutations += t.mutations;
  }
  o.require(certs.failed == 0, "certificate check failed: " + certs.first_failure);
  o.require(failed == 0, std::to_string(failed) + " property-suite certificates failed");
  o.require(checked > 0 && mutations > 0, "no certificates checked");
  if (o.ok)
    o.detail = std::to_string(checked) + " certificates verified, " +
               std::to_string(mutations) + " witness mutations judged correctly";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"morphism count", morphism_count},
      {"hom complex census", hom_census},
      {"clique sequence replay", sequence_replay},
      {"fold-induced hom dismantling", fold_induced},
      {"reflexive cycles", reflexive_cycles},
      {"diamond poset", diamond_poset},
      {"property suites", property_suites},
      {"certificate integrity", certificate_integrity}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::printf("%s %zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
