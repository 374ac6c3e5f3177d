#include <gtest/gtest.h>

#include <random>

#include "dismantle/worked_examples.hpp"
#include "oracles.hpp"

namespace {

using namespace dismantle;
using examples::diamond;

template <class V>
Graph<V> graph_of(std::vector<V> vs, std::vector<std::pair<V, V>> es) {
  return Graph<V>(std::move(vs), es);
}

TEST(Comp, Examples) {
  EXPECT_EQ(comp(chain_poset(3)), complete_graph(3, true));
  auto anti = comp(antichain_poset(2));
  EXPECT_TRUE(anti.reflexive());
  EXPECT_FALSE(anti.adjacent(0, 1));
  auto d = comp(diamond());
  EXPECT_TRUE(d.reflexive());
  EXPECT_TRUE(d.adjacent("a", "d"));
  EXPECT_FALSE(d.adjacent("b", "c"));
  EXPECT_EQ(d.edges().size(), 4u + 5u);
}

TEST(Comp, CommutesWithDeletion) {
  std::mt19937_64 rng(oracle::kSeed);
  for (int i = 0; i < 100; ++i) {
    auto p = oracle::random_poset(rng, 1 + i % 7, 0.4);
    for (const auto& x : p.elements())
      EXPECT_EQ(comp(p).without(x), comp(p.without(x)));
  }
}

TEST(CliquePoset, Examples) {
  auto k2 = clique_poset(path_graph(2));
  EXPECT_EQ(k2.elements(), (std::vector<Simplex<int>>{{0}, {0, 1}, {1}}));
  EXPECT_TRUE(k2.less({0}, {0, 1}));
  EXPECT_FALSE(k2.comparable_at(0, 2));
  auto anti = clique_poset(Graph<int>({0, 1}, std::vector<std::pair<int, int>>{}));
  EXPECT_EQ(anti.size(), 2u);
  EXPECT_TRUE(anti.covers().empty());
}

TEST(CliquePoset, LoopsDoNotMatter) {
  EXPECT_EQ(clique_poset(cycle_graph(5)), clique_poset(cycle_graph(5, true)));
}

TEST(CliquePoset, HomGraphOfPathIntoTriangle) {
  auto p = clique_poset(hom_graph(examples::p3(), examples::k3()));
  EXPECT_EQ(p.size(), 48u);
  std::vector<int> by_size(5);
  for (const auto& c : p.elements()) ++by_size[c.size()];
  EXPECT_EQ(by_size, (std::vector<int>{0, 12, 21, 12, 3}));
}

TEST(CliquePoset, BudgetIsResourceError) {
  EXPECT_THROW(clique_poset(complete_graph(12, true), 100), ResourceError);
}

TEST(AllCliques, MatchOracle) {
  std::mt19937_64 rng(oracle::kSeed + 1);
  for (int i = 0; i < 150; ++i) {
    auto g = oracle::random_graph(rng, 1 + i % 8, 0.5, i % 2 == 0);
    auto c = all_cliques(g);
    EXPECT_EQ(std::set<std::vector<int>>(c.begin(), c.end()), oracle::cliques(g));
    for (const auto& m : maximal_cliques(g)) EXPECT_TRUE(oracle::cliques(g).count(m));
  }
}

TEST(CliqueComplex, Examples) {
  auto c4 = clique_complex(cycle_graph(4, true));
  EXPECT_EQ(c4.facets().size(), 4u);
  for (const auto& f : c4.facets()) EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(clique_complex(complete_graph(3, true)), full_simplex(3));
  EXPECT_EQ(clique_complex(path_graph(3)).facets(),
            (std::vector<Simplex<int>>{{0, 1}, {1, 2}}));
}

TEST(FaceGraph, Examples) {
  auto edge = face_graph(full_simplex(2));
  EXPECT_EQ(edge, graph_of<Simplex<int>>({{0}, {0, 1}, {1}},
                                         {{{0}, {0}}, {{1}, {1}}, {{0, 1}, {0, 1}},
                                          {{0}, {0, 1}}, {{1}, {0, 1}}}));
  EXPECT_EQ(face_graph(full_simplex(3)).size(), 7u);
  auto hex = face_graph(simplex_boundary(3));
  EXPECT_EQ(hex.size(), 6u);
  EXPECT_TRUE(are_isomorphic(hex, cycle_graph(6, true)));
}

TEST(FaceGraph, EqualsCompOfFacePoset) {
  std::mt19937_64 rng(oracle::kSeed + 2);
  for (int i = 0; i < 100; ++i) {
    auto k = oracle::random_complex(rng, 2 + i % 6, 1 + i % 4, 4);
    EXPECT_EQ(face_graph(k), comp(face_poset(k)));
  }
}

TEST(OrderComplex, Examples) {
  EXPECT_EQ(order_complex(chain_poset(3)), full_simplex(3));
  EXPECT_EQ(order_complex(antichain_poset(2)).facets(),
            (std::vector<Simplex<int>>{{0}, {1}}));
  using S = Simplex<Name>;
  EXPECT_EQ(order_complex(diamond()).facets(),
            (std::vector<S>{S{"a", "b", "d"}, S{"a", "c", "d"}}));
}

TEST(FacePoset, Examples) {
  auto edge = face_poset(full_simplex(2));
  EXPECT_EQ(edge.size(), 3u);
  EXPECT_EQ(edge.covers().size(), 2u);
  auto tri = face_poset(full_simplex(3));
  EXPECT_EQ(tri.size(), 7u);
  for (const auto& s : tri.elements())
    for (const auto& t : tri.elements())
      EXPECT_EQ(tri.less(s, t), s != t && is_face(s, t));
  auto points = face_poset(SimplicialComplex<int>::from_facets({{0}, {1}}));
  EXPECT_EQ(points.size(), 2u);
  EXPECT_TRUE(points.covers().empty());
}

TEST(Rub, Examples) {
  auto d = rub(diamond());
  EXPECT_EQ(d.edges().size(), 10u);  // K4 with loops
  EXPECT_EQ(rub(chain_poset(3)), complete_graph(3, true));
  EXPECT_FALSE(rub(antichain_poset(2)).adjacent(0, 1));
}

TEST(Rub, MatchesOracle) {
  std::mt19937_64 rng(oracle::kSeed + 3);
  for (int i = 0; i < 100; ++i) {
    auto p = oracle::random_poset(rng, 1 + i % 7, 0.35);
    auto g = rub(p);
    for (const auto& x : p.elements())
      for (const auto& y : p.elements()) {
        bool want = false;
        for (const auto& z : p.elements())
          if ((z == x || p.less(x, z)) && (z == y || p.less(y, z))) want = true;
        EXPECT_EQ(g.adjacent(x, y), want);
      }
  }
}

TEST(AtomsGraph, CliquePosetRecoversReflexiveGraph) {
  for (const auto& g : {path_graph(3), cycle_graph(4, true), cycle_graph(5)})
    EXPECT_EQ(identify_singletons(atoms_graph(clique_poset(g))), reflexive_closure(g));
}

TEST(AtomsGraph, RubDismantlesOntoAtoms) {
  std::mt19937_64 rng(oracle::kSeed + 4);
  for (int i = 0; i < 100; ++i) {
    auto p = oracle::random_poset(rng, 1 + i % 8, 0.35);
    auto r = rub(p);
    auto c = dismantles_onto(r, p.atoms());
    ASSERT_TRUE(c);
    EXPECT_TRUE(oracle::check(r, *c).ok());
    EXPECT_EQ(residual(r, *c), atoms_graph(p));
  }
}

TEST(Bd, GraphExamples) {
  using S = Simplex<int>;
  auto b = bd(path_graph(2));
  EXPECT_EQ(b, graph_of<S>({{0}, {0, 1}, {1}},
                           {{{0}, {0}}, {{1}, {1}}, {{0, 1}, {0, 1}},
                            {{0}, {0, 1}}, {{1}, {0, 1}}}));
  EXPECT_EQ(b, bd_via_complexes(path_graph(2)));
}

TEST(Bd, ComplexExamples) {
  auto b = bd(full_simplex(2));
  EXPECT_EQ(b.facets().size(), 2u);
  for (const auto& f : b.facets()) EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(b, bd_via_posets(full_simplex(2)));
}

TEST(Bd, PosetExamples) {
  auto b = bd(diamond());
  EXPECT_EQ(b.size(), 11u);  // nonempty chains of the diamond
  EXPECT_EQ(b, bd_via_complexes(diamond()));
}

TEST(Bd, BothRoutesAgree) {
  std::mt19937_64 rng(oracle::kSeed + 5);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_graph(rng, 1 + i % 6, 0.5, i % 2 == 0);
    EXPECT_EQ(bd(g), bd_via_complexes(g));
    auto p = oracle::random_poset(rng, 1 + i % 6, 0.4);
    EXPECT_EQ(bd(p), bd_via_complexes(p));
    auto k = oracle::random_complex(rng, 2 + i % 5, 1 + i % 3, 3);
    EXPECT_EQ(bd(k), bd_via_posets(k));
  }
}

TEST(Bd, FoldTransportsToSubdivision) {
  std::mt19937_64 rng(oracle::kSeed + 6);
  int folds = 0;
  for (int i = 0; i < 400 && folds < 40; ++i) {
    auto g = oracle::random_graph(rng, 2 + i % 4, 0.6, true);
    auto d = find_dominated(g);
    if (d.empty()) continue;
    ++folds;
    auto big = bd(g);
    auto c = dismantles_onto(big, bd(g.without(d[0].deleted)).vertices());
    ASSERT_TRUE(c);
    EXPECT_TRUE(oracle::check(big, *c).ok());
  }
  EXPECT_EQ(folds, 40);
}

}  // namespace
