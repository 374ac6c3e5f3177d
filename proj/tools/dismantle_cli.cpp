// dismantle: command-line front end.
//
// JSON reports go to stdout, human-readable tables to stderr.
// Exit status: 0 yes / ok, 1 no, 2 error, 3 budget exceeded.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dismantle/dismantle.hpp"
#include "dismantle/worked_examples.hpp"

namespace {

using namespace dismantle;

enum Exit { kOk = 0, kNo = 1, kError = 2, kBudget = 3 };

struct Options {
  bool graph = false, poset = false, complex = false;
  bool weak = false;
  std::vector<std::string> inputs;
  std::string keep;
  std::string functor;
  std::string side;
  std::string x, witness;
  std::size_t max_cliques = kDefaultMaxCliques;
  std::size_t max_morphisms = kDefaultMorphismExtensions;
  std::size_t max_iso_nodes = kDefaultIsoNodes;
  std::optional<std::uint64_t> seed;
};

int emit(const json& j, int code = kOk) {
  std::cout << j.dump(2) << "\n";
  return code;
}

enum class Kind { graph, poset, complex };

Kind kind_of(const Options& o) {
  int n = o.graph + o.poset + o.complex;
  if (n != 1)
    fail(ErrorCode::input, "exactly one of --graph, --poset, --complex");
  return o.graph ? Kind::graph : o.poset ? Kind::poset : Kind::complex;
}

void need_inputs(const Options& o, std::size_t n) {
  if (o.inputs.size() != n)
    fail(ErrorCode::input, "expected " + std::to_string(n) + " input(s), got " +
                               std::to_string(o.inputs.size()));
}

// A file path, or a built-in name such as P3, C5o, K3.
Graph<Name> load_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) return parse_graph(read_file(spec));
  if (auto g = named_graph(spec)) return to_named(*g);
  fail(ErrorCode::input, "no such file or named graph '" + spec + "'");
}

Poset<Name> load_poset(const std::string& path) {
  return parse_poset(read_file(path));
}

SimplicialComplex<Name> load_complex(const std::string& path) {
  return parse_complex(read_file(path));
}

std::vector<Name> split_ids(const std::string& s) {
  std::vector<Name> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.emplace_back(cur);
  return out;
}

template <class V>
json graph_json(const Graph<V>& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices()) vs.push_back(label_json(v));
  for (const auto& [x, y] : g.edges())
    es.push_back(json::array({label_json(x), label_json(y)}));
  return {{"vertices", vs}, {"edges", es}, {"digest", g.digest()}};
}

template <class T>
json poset_json(const Poset<T>& p) {
  json es = json::array(), cs = json::array();
  for (const auto& x : p.elements()) es.push_back(label_json(x));
  for (const auto& [x, y] : p.covers())
    cs.push_back(json::array({label_json(x), label_json(y)}));
  return {{"elements", es}, {"covers", cs}, {"digest", p.digest()}};
}

template <class T>
json complex_json(const SimplicialComplex<T>& k) {
  json fs = json::array();
  for (const auto& f : k.facets()) fs.push_back(label_json(f));
  return {{"facets", fs}, {"digest", k.digest()}};
}

template <class T>
void print_steps(const Certificate<T>& c) {
  for (std::size_t i = 0; i < c.steps.size(); ++i)
    std::cerr << "  " << i << ": delete " << label(c.steps[i].deleted)
              << "  (witness " << label(c.steps[i].witness) << ")\n";
}

// ------------------------------------------------------------------- core

int cmd_core(const Options& o) {
  need_inputs(o, 1);
  std::mt19937_64 rng(o.seed.value_or(0));
  switch (kind_of(o)) {
    case Kind::graph: {
      auto g = load_graph(o.inputs[0]);
      auto r = o.seed ? dismantle_core(g, rng) : dismantle_core(g);
      std::cerr << "graph core: " << r.residual.size() << " of " << g.size()
                << " vertices\n";
      print_steps(r.certificate);
      return emit({{"category", "graph"},
                   {"core", graph_json(r.residual)},
                   {"text", serialize(r.residual)},
                   {"certificate", to_json(r.certificate)}});
    }
    case Kind::poset: {
      auto p = load_poset(o.inputs[0]);
      auto r = poset_core(p, o.weak ? PosetMode::weak : PosetMode::strict);
      std::cerr << (o.weak ? "weak " : "") << "poset core: "
                << r.residual.size() << " of " << p.size() << " elements\n";
      print_steps(r.certificate);
      return emit({{"category", to_string(r.certificate.category)},
                   {"core", poset_json(r.residual)},
                   {"text", serialize(r.residual)},
                   {"certificate", to_json(r.certificate)}});
    }
    case Kind::complex: {
      auto k = load_complex(o.inputs[0]);
      auto r = strong_collapse_core(k);
      std::cerr << "strong collapse core: " << r.residual.vertices().size()
                << " of " << k.vertices().size() << " vertices\n";
      print_steps(r.certificate);
      return emit({{"category", "complex"},
                   {"core", complex_json(r.residual)},
                   {"text", serialize(r.residual)},
                   {"certificate", to_json(r.certificate)}});
    }
  }
  return kError;
}

// ------------------------------------------------------------------- onto

int cmd_onto(const Options& o) {
  const Kind kind = kind_of(o);
  std::optional<json> cert;
  if (kind == Kind::complex) {
    need_inputs(o, 2);
    auto k = load_complex(o.inputs[0]);
    auto l = load_complex(o.inputs[1]);
    if (auto c = strong_collapse_onto(k, l)) cert = to_json(*c);
  } else {
    need_inputs(o, 1);
    if (o.keep.empty()) fail(ErrorCode::input, "--keep is required");
    auto keep = split_ids(o.keep);
    if (kind == Kind::graph) {
      auto g = load_graph(o.inputs[0]);
      std::mt19937_64 rng(o.seed.value_or(0));
      auto c = o.seed ? dismantles_onto(g, keep, rng) : dismantles_onto(g, keep);
      if (c) cert = to_json(*c);
    } else {
      if (!o.weak)
        fail(ErrorCode::input,
             "strict poset dismantling onto a target is not provided; use "
             "--weak");
      auto p = load_poset(o.inputs[0]);
      for (const auto& v : keep)
        if (!p.contains(v))
          fail(ErrorCode::input, "unknown element '" + v.str() + "'");
      // Weak dismantlings of P are exactly dismantlings of Comp(P).
      if (auto c = dismantles_onto(comp(p), keep)) {
        c->category = Category::weak_poset;
        c->start_digest = p.digest();
        cert = to_json(*c);
      }
    }
  }
  if (!cert) {
    std::cerr << "no dismantling onto the target\n";
    return emit({{"dismantles", false}}, kNo);
  }
  std::cerr << "dismantles onto the target in " << (*cert)["steps"].size()
            << " step(s)\n";
  return emit({{"dismantles", true}, {"certificate", *cert}});
}

// ------------------------------------------------------------------ equiv

int cmd_equiv(const Options& o) {
  need_inputs(o, 2);
  bool same = false;
  std::string how;
  switch (kind_of(o)) {
    case Kind::graph:
      same = same_d_homotopy_type(load_graph(o.inputs[0]),
                                  load_graph(o.inputs[1]), o.max_iso_nodes);
      how = "stiff cores";
      break;
    case Kind::poset:
      same = same_d_homotopy_type(comp(load_poset(o.inputs[0])),
                                  comp(load_poset(o.inputs[1])),
                                  o.max_iso_nodes);
      how = "cores of the comparability graphs";
      break;
    case Kind::complex: {
      auto k = strong_collapse_core(load_complex(o.inputs[0])).residual;
      auto l = strong_collapse_core(load_complex(o.inputs[1])).residual;
      same = same_d_homotopy_type(face_graph(k), face_graph(l),
                                  o.max_iso_nodes);
      how = "cores of the face graphs";
      break;
    }
  }
  std::string report = same ? how + " isomorphic" : how + " non-isomorphic";
  std::cerr << (same ? "equivalent: " : "not equivalent: ") << report << "\n";
  return emit({{"equivalent", same}, {"report", report}}, same ? kOk : kNo);
}

// ---------------------------------------------------------------- functor

json corr(const Name& n) { return json::array({n.str()}); }
json corr(const Simplex<Name>& s) { return label_json(s); }

template <class Object>
json image_report(const std::string& category, const Object& img) {
  json map = json::object();
  auto named = to_named(img);
  if constexpr (requires { img.elements(); }) {
    for (const auto& e : img.elements()) map[label(e)] = corr(e);
  } else {
    for (const auto& e : img.vertices()) map[label(e)] = corr(e);
  }
  return {{"category", category},
          {"text", serialize(named)},
          {"correspondence", map}};
}

int cmd_functor(const Options& o) {
  need_inputs(o, 1);
  const std::string& f = o.functor;
  const Kind kind = kind_of(o);
  auto wrong = [&] {
    fail(ErrorCode::input, "functor '" + f + "' does not apply to this input");
  };
  json out;
  if (kind == Kind::graph) {
    auto g = load_graph(o.inputs[0]);
    if (f == "clique-poset")
      out = image_report("poset", clique_poset(g, o.max_cliques));
    else if (f == "clique-complex")
      out = image_report("complex", clique_complex(g, o.max_cliques));
    else if (f == "reflexive-closure")
      out = image_report("graph", reflexive_closure(g));
    else if (f == "bd")
      out = image_report("graph", comp(clique_poset(g, o.max_cliques)));
    else
      wrong();
  } else if (kind == Kind::poset) {
    auto p = load_poset(o.inputs[0]);
    if (f == "comp")
      out = image_report("graph", comp(p));
    else if (f == "order-complex")
      out = image_report("complex", order_complex(p));
    else if (f == "rub")
      out = image_report("graph", rub(p));
    else if (f == "atoms-graph")
      out = image_report("graph", atoms_graph(p));
    else if (f == "bd")
      out = image_report("poset", clique_poset(comp(p), o.max_cliques));
    else
      wrong();
  } else {
    auto k = load_complex(o.inputs[0]);
    if (f == "face-graph")
      out = image_report("graph", face_graph(k));
    else if (f == "face-poset")
      out = image_report("poset", face_poset(k));
    else if (f == "bd")
      out = image_report("complex", order_complex(face_poset(k)));
    else
      wrong();
  }
  out["functor"] = f;
  std::cerr << f << ":\n" << out["text"].get<std::string>();
  return emit(out);
}

// -------------------------------------------------------------------- hom

int cmd_hom_graph(const Options& o) {
  need_inputs(o, 2);
  auto g = load_graph(o.inputs[0]);
  auto h = load_graph(o.inputs[1]);
  auto hg = hom_graph(g, h, o.max_morphisms);
  json vs = json::array(), es = json::array();
  for (const auto& f : hg.vertices()) vs.push_back(label_json(f));
  for (const auto& [f, f2] : hg.edges())
    if (!(f == f2))
      es.push_back(json::array({hg.index_of(f), hg.index_of(f2)}));
  std::cerr << "hom graph: " << hg.size() << " morphisms, " << es.size()
            << " edges between distinct morphisms\n";
  for (std::size_t i = 0; i < hg.size(); ++i)
    std::cerr << "  " << i << ": " << label(hg.vertex(i)) << "\n";
  return emit({{"morphisms", vs}, {"edges", es}, {"digest", hg.digest()}});
}

int cmd_hom_complex(const Options& o) {
  need_inputs(o, 2);
  auto g = load_graph(o.inputs[0]);
  auto h = load_graph(o.inputs[1]);
  auto fp = hom_face_poset(g, h, o.max_cliques);
  json cells = json::array(), covers = json::array();
  std::map<std::size_t, std::size_t> by_dim;
  for (const auto& eta : fp.elements()) {
    cells.push_back(label_json(eta));
    ++by_dim[eta.dimension()];
  }
  for (const auto& [a, b] : fp.covers())
    covers.push_back(json::array({fp.index_of(a), fp.index_of(b)}));
  json dims = json::object();
  for (const auto& [d, n] : by_dim) dims[std::to_string(d)] = n;
  std::cerr << "Hom complex: " << fp.size() << " cells\n";
  for (const auto& [d, n] : by_dim)
    std::cerr << "  dimension " << d << ": " << n << "\n";
  return emit({{"cells", cells}, {"by_dimension", dims}, {"covers", covers}});
}

int cmd_hom_dismantle(const Options& o) {
  need_inputs(o, 2);
  auto g = load_graph(o.inputs[0]);
  auto h = load_graph(o.inputs[1]);
  if (o.side.empty()) {
    auto d = clique_to_cell_dismantle(g, h, o.max_cliques);
    std::cerr << "C(hom) -> F_P(Hom): " << d.cliques.size() << " cliques, "
              << d.certificate.size() << " deletions, " << d.residual.size()
              << " cells\n";
    return emit({{"kind", "cliques-to-cells"},
                 {"cliques", d.cliques.size()},
                 {"cells", d.residual.size()},
                 {"certificate", to_json(d.certificate)}});
  }
  if (o.x.empty() || o.witness.empty())
    fail(ErrorCode::input, "--side needs --x and --witness");
  HomSide side;
  if (o.side == "source")
    side = HomSide::source;
  else if (o.side == "target")
    side = HomSide::target;
  else
    fail(ErrorCode::input, "--side must be source or target");
  auto d = fold_induced_hom_dismantle(g, h, side, Name(o.x), Name(o.witness),
                                      o.max_cliques);
  json emb = json::array();
  for (const auto& [from, to] : d.embedding)
    emb.push_back(json::array({label_json(from), label_json(to)}));
  std::cerr << "F_G(Hom) fold on the " << o.side << " side: "
            << d.face_graph.size() << " -> " << d.embedding.size()
            << " cells in " << d.certificate.size() << " deletions\n";
  return emit({{"kind", "fold"},
               {"side", o.side},
               {"cells", d.face_graph.size()},
               {"embedded_cells", d.embedding.size()},
               {"embedding", emb},
               {"certificate", to_json(d.certificate)}});
}

// ----------------------------------------------------------------- verify

template <class Object>
int verify_against(const Object& obj, const Certificate<Name>& cert) {
  if (!(cert.start_digest == obj.digest()))
    fail(ErrorCode::stale_certificate,
         "certificate digest " + cert.start_digest +
             " does not match input digest " + obj.digest());
  Replay r = replay_certificate(obj, cert);
  if (!r.ok) {
    std::cerr << "illegal step " << *r.failed_step << ": " << r.reason << "\n";
    return emit({{"ok", false},
                 {"error", {{"code", "certificate"}, {"message", r.reason}}},
                 {"failed_step", *r.failed_step}},
                kError);
  }
  std::cerr << "certificate verified: " << cert.size() << " step(s)\n";
  return emit({{"ok", true}, {"steps", cert.size()}});
}

int cmd_verify(const Options& o) {
  need_inputs(o, 2);
  json j;
  try {
    j = json::parse(read_file(o.inputs[1]));
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("certificate is not JSON: ") + e.what());
  }
  if (j.contains("certificate")) j = j["certificate"];
  auto cert = certificate_from_json(j);
  switch (kind_of(o)) {
    case Kind::graph:
      if (cert.category != Category::graph)
        fail(ErrorCode::input, "not a graph certificate");
      return verify_against(load_graph(o.inputs[0]), cert);
    case Kind::poset:
      if (cert.category != Category::poset &&
          cert.category != Category::weak_poset)
        fail(ErrorCode::input, "not a poset certificate");
      return verify_against(load_poset(o.inputs[0]), cert);
    case Kind::complex:
      if (cert.category != Category::complex)
        fail(ErrorCode::input, "not a complex certificate");
      return verify_against(load_complex(o.inputs[0]), cert);
  }
  return kError;
}

// ------------------------------------------------------------- paper-demo

int cmd_demo(const Options&) {
  auto checks = examples::run_worked_examples();
  json items = json::array();
  bool all = true;
  for (const auto& c : checks) {
    std::cerr << (c.ok ? "PASS  " : "FAIL  ") << c.id << "  " << c.claim;
    if (!c.ok) std::cerr << "  [" << c.detail << "]";
    std::cerr << "\n";
    items.push_back({{"id", c.id},
                     {"claim", c.claim},
                     {"pass", c.ok},
                     {"detail", c.detail}});
    all = all && c.ok;
  }
  return emit({{"all_pass", all}, {"items", items}}, all ? kOk : kNo);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dismantlability of graphs, posets and simplicial complexes"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool categories = true) {
    if (categories) {
      sub->add_flag("--graph", o.graph, "inputs are graphs");
      sub->add_flag("--poset", o.poset, "inputs are posets");
      sub->add_flag("--complex", o.complex, "inputs are simplicial complexes");
    }
    sub->add_option("--max-cliques", o.max_cliques, "clique budget");
    sub->add_option("--max-morphisms", o.max_morphisms,
                    "morphism search budget (extensions)");
    sub->add_option("--max-iso-nodes", o.max_iso_nodes,
                    "isomorphism search budget (nodes)");
    sub->add_option("--seed", o.seed, "random tie-breaking seed");
  };

  auto* core = app.add_subcommand("core", "stiff core / strong collapse core");
  common(core);
  core->add_flag("--weak", o.weak, "weak dismantling for posets");
  core->add_option("input", o.inputs)->required();

  auto* onto = app.add_subcommand("onto", "dismantle onto a sub-object");
  common(onto);
  onto->add_flag("--weak", o.weak, "weak dismantling for posets");
  onto->add_option("--keep", o.keep, "comma-separated ids to keep");
  onto->add_option("input", o.inputs)->required();

  auto* equiv = app.add_subcommand("equiv", "same homotopy type?");
  common(equiv);
  equiv->add_option("input", o.inputs)->required();

  auto* functor = app.add_subcommand("functor", "apply a functor");
  common(functor);
  functor
      ->add_option("name", o.functor,
                   "comp, clique-poset, clique-complex, face-graph, "
                   "order-complex, face-poset, rub, atoms-graph, "
                   "reflexive-closure, bd")
      ->required();
  functor->add_option("input", o.inputs)->required();

  auto* homg = app.add_subcommand("hom-graph", "hom(G, H)");
  common(homg, false);
  homg->add_option("input", o.inputs, "G H")->required();

  auto* homc = app.add_subcommand("hom-complex", "cells of Hom(G, H)");
  common(homc, false);
  homc->add_option("input", o.inputs, "G H")->required();

  auto* homd = app.add_subcommand(
      "hom-dismantle", "C(hom) onto F_P(Hom), or a fold-induced dismantling");
  common(homd, false);
  homd->add_option("--side", o.side, "source or target");
  homd->add_option("--x", o.x, "dominated vertex");
  homd->add_option("--witness", o.witness, "dominating vertex");
  homd->add_option("input", o.inputs, "G H")->required();

  auto* verify = app.add_subcommand("verify", "replay a certificate");
  common(verify);
  verify->add_option("input", o.inputs, "object certificate.json")->required();

  auto* demo = app.add_subcommand("paper-demo", "replay the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  try {
    if (core->parsed()) return cmd_core(o);
    if (onto->parsed()) return cmd_onto(o);
    if (equiv->parsed()) return cmd_equiv(o);
    if (functor->parsed()) return cmd_functor(o);
    if (homg->parsed()) return cmd_hom_graph(o);
    if (homc->parsed()) return cmd_hom_complex(o);
    if (homd->parsed()) return cmd_hom_dismantle(o);
    if (verify->parsed()) return cmd_verify(o);
    if (demo->parsed()) return cmd_demo(o);
  } catch (const ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return emit({{"ok", false},
                 {"error", {{"code", "resource"}, {"message", e.what()}}}},
                kBudget);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return emit({{"ok", false},
                 {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}},
                kError);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return emit({{"ok", false},
                 {"error", {{"code", "internal"}, {"message", e.what()}}}},
                kError);
  }
  return kError;
}
