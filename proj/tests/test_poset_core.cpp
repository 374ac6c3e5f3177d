#include <gtest/gtest.h>

#include <random>

#include "dismantle/worked_examples.hpp"
#include "oracles.hpp"

namespace {

using namespace dismantle;
using examples::diamond;

TEST(Poset, CoversAreTransitivelyClosed) {
  auto p = diamond();
  EXPECT_TRUE(p.less("d", "a"));
  EXPECT_FALSE(p.less("b", "c"));
  EXPECT_FALSE(p.less("a", "a"));
  EXPECT_EQ(p.covers().size(), 4u);
}

TEST(Poset, CycleIsValidationError) {
  try {
    Poset<int>::from_covers({0, 1, 2},
                            std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::validation);
  }
}

TEST(Poset, UnknownCoverElementIsInputError) {
  EXPECT_THROW(
      Poset<int>::from_covers({0}, std::vector<std::pair<int, int>>{{0, 1}}), Error);
}

TEST(DismantlableElements, DiamondExcludesTopAndBottom) {
  auto d = dismantlable_elements(diamond());
  using D = PosetDomination<Name>;
  EXPECT_EQ(d, (std::vector<D>{{"b", "a", Direction::up},
                               {"b", "d", Direction::down},
                               {"c", "a", Direction::up},
                               {"c", "d", Direction::down}}));
}

TEST(DismantlableElements, ChainHasAllElements) {
  auto d = dismantlable_elements(chain_poset(3));
  std::set<int> xs;
  for (const auto& e : d) xs.insert(e.element);
  EXPECT_EQ(xs, (std::set<int>{0, 1, 2}));
}

TEST(DismantlableElements, AntichainHasNone) {
  EXPECT_TRUE(dismantlable_elements(antichain_poset(2)).empty());
}

TEST(DismantlableElements, MatchesOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : oracle::all_posets(n)) {
      std::set<std::pair<int, int>> got, want;
      for (const auto& e : dismantlable_elements(p)) got.insert({e.element, e.witness});
      for (const auto& x : p.elements())
        for (const auto& a : p.elements())
          if (a != x && oracle::beat(p, a, x)) want.insert({x, a});
      EXPECT_EQ(got, want);
    }
}

TEST(WeaklyDismantlable, DiamondTopAndBottomDominateEachOther) {
  auto w = weakly_dismantlable_elements(diamond());
  EXPECT_NE(std::find(w.begin(), w.end(), Step<Name>{"d", "a"}), w.end());
  EXPECT_NE(std::find(w.begin(), w.end(), Step<Name>{"a", "d"}), w.end());
}

TEST(WeaklyDismantlable, ContainsEveryDismantlableElement) {
  std::mt19937_64 rng(oracle::kSeed);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_poset(rng, 1 + i % 8, 0.4);
    auto w = weakly_dismantlable_elements(p);
    for (const auto& e : dismantlable_elements(p))
      EXPECT_NE(std::find(w.begin(), w.end(), Step<int>{e.element, e.witness}), w.end());
  }
}

TEST(WeaklyDismantlable, AntichainHasNone) {
  EXPECT_TRUE(weakly_dismantlable_elements(antichain_poset(2)).empty());
}

TEST(WeaklyDismantlable, MatchesComparabilityGraphDomination) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : oracle::all_posets(n)) {
      auto g = comp(p);
      std::vector<std::pair<int, int>> got;
      for (const auto& s : weakly_dismantlable_elements(p)) got.emplace_back(s.deleted, s.witness);
      EXPECT_EQ(got, oracle::dominated_pairs(g));
    }
}

TEST(PosetCore, ChainCollapsesToOnePoint) {
  for (auto mode : {PosetMode::strict, PosetMode::weak}) {
    auto r = poset_core(chain_poset(5), mode);
    EXPECT_EQ(r.residual.size(), 1u);
    EXPECT_EQ(r.certificate.steps.size(), 4u);
    EXPECT_TRUE(oracle::check(chain_poset(5), r.certificate).ok());
  }
}

TEST(PosetCore, DiamondStrictAndWeak) {
  auto strict = poset_core(diamond(), PosetMode::strict);
  auto weak = poset_core(diamond(), PosetMode::weak);
  EXPECT_EQ(strict.residual.size(), 1u);
  EXPECT_EQ(weak.residual.size(), 1u);
  EXPECT_EQ(strict.certificate.category, Category::poset);
  EXPECT_EQ(weak.certificate.category, Category::weak_poset);
  EXPECT_EQ(strict.certificate.steps,
            (std::vector<Step<Name>>{{"b", "a"}, {"a", "c"}, {"c", "d"}}));
  EXPECT_TRUE(oracle::check(diamond(), strict.certificate).ok());
  EXPECT_TRUE(oracle::check(diamond(), weak.certificate).ok());
}

TEST(PosetCore, CrownIsStiffInBothModes) {
  // Four-element crown: two minima below two maxima.  No beat points, but
  // comp is a 4-cycle, which is stiff as a reflexive graph, so weak mode
  // also stops.  Adding a top makes both modes collapse.
  auto crown = Poset<int>::from_covers(
      {0, 1, 2, 3}, std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_TRUE(poset_core(crown).certificate.empty());
  EXPECT_TRUE(poset_core(crown, PosetMode::weak).certificate.empty());
  auto topped = Poset<int>::from_covers(
      {0, 1, 2, 3, 4},
      std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(poset_core(topped).residual.size(), 1u);
  EXPECT_EQ(poset_core(topped, PosetMode::weak).residual.size(), 1u);
}

TEST(PosetCore, CertificatesPassOracleOnRandomPosets) {
  std::mt19937_64 rng(oracle::kSeed + 5);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_poset(rng, 1 + i % 9, 0.35);
    for (auto mode : {PosetMode::strict, PosetMode::weak}) {
      auto r = poset_core(p, mode);
      auto c = oracle::check(p, r.certificate);
      EXPECT_TRUE(c.ok()) << c.mutation_errors;
      if (mode == PosetMode::strict) {
        EXPECT_TRUE(dismantlable_elements(r.residual).empty());
      } else {
        EXPECT_TRUE(weakly_dismantlable_elements(r.residual).empty());
      }
    }
  }
}

TEST(PosetCertificate, WrongCategoryAndStaleDigest) {
  auto p = diamond();
  Certificate<Name> weak{Category::weak_poset, p.digest(), {{"d", "a"}}};
  Certificate<Name> strict{Category::poset, p.digest(), {{"d", "a"}}};
  Certificate<Name> graph{Category::graph, p.digest(), {}};
  EXPECT_TRUE(verify_certificate(p, weak));
  EXPECT_FALSE(verify_certificate(p, strict));
  EXPECT_FALSE(replay_certificate(p, graph).ok);
  Certificate<Name> stale{Category::poset, chain_poset(2).digest(), {}};
  EXPECT_THROW(verify_certificate(p, stale), Error);
}

TEST(CertifySequence, PicksFirstWitness) {
  auto c = certify_sequence(diamond(), std::vector<Name>{"b", "c", "a"});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->steps, (std::vector<Step<Name>>{{"b", "a"}, {"c", "a"}, {"a", "d"}}));
  EXPECT_FALSE(certify_sequence(diamond(), std::vector<Name>{"a"}));
  EXPECT_TRUE(certify_sequence(diamond(), std::vector<Name>{"a"}, PosetMode::weak));
}

TEST(FixpointDismantle, IdentityGivesEmptyCertificate) {
  auto p = diamond();
  auto f = make_monotone_map(p, [](const Name& x) { return x; });
  EXPECT_TRUE(fixpoint_dismantle(p, f).empty());
}

TEST(FixpointDismantle, ChainShiftedUp) {
  auto p = chain_poset(3);
  auto f = make_monotone_map(p, [](int x) { return std::min(x + 1, 2); });
  auto c = fixpoint_dismantle(p, f);
  EXPECT_EQ(c.steps, (std::vector<Step<int>>{{1, 2}, {0, 2}}));
  EXPECT_EQ(residual(p, c), fixed_points(p, f));
  EXPECT_TRUE(oracle::check(p, c).ok());
}

TEST(FixpointDismantle, ChainShiftedDown) {
  auto p = chain_poset(4);
  auto f = make_monotone_map(p, [](int x) { return std::max(x - 2, 0); });
  auto c = fixpoint_dismantle(p, f);
  EXPECT_EQ(residual(p, c).elements(), std::vector<int>{0});
  EXPECT_TRUE(oracle::check(p, c).ok());
}

TEST(FixpointDismantle, CliquePosetOfLoopedEdge) {
  // C(K2 with loops), f(c) = c with vertex 0 added; 0 dominates 1.
  auto g = complete_graph(2, true);
  auto p = clique_poset(g);
  auto f = make_monotone_map(p, [](const Simplex<int>& c) {
    auto s = c;
    s.push_back(0);
    return make_simplex(std::move(s));
  });
  auto cert = fixpoint_dismantle(p, f);
  EXPECT_EQ(cert.steps.size(), 1u);
  auto fix = fixed_points(p, f);
  EXPECT_EQ(residual(p, cert), fix);
  EXPECT_EQ(fix.elements(), (std::vector<Simplex<int>>{{0}, {0, 1}}));
  EXPECT_TRUE(oracle::check(p, cert).ok());
}

TEST(FixpointDismantle, ResidualIsFixOnRandomClosures) {
  // Closure operators x -> least element of an up-closed family give f >= 1.
  std::mt19937_64 rng(oracle::kSeed + 6);
  int tried = 0;
  for (int i = 0; i < 400 && tried < 100; ++i) {
    auto p = oracle::random_poset(rng, 2 + i % 7, 0.4);
    // f(x) = the top element when one exists, otherwise skip.
    std::optional<int> top;
    for (const auto& x : p.elements()) {
      bool is_top = true;
      for (const auto& y : p.elements())
        if (y != x && !p.less(y, x)) is_top = false;
      if (is_top) top = x;
    }
    if (!top) continue;
    ++tried;
    auto f = make_monotone_map(p, [&](int) { return *top; });
    auto c = fixpoint_dismantle(p, f);
    EXPECT_EQ(residual(p, c), fixed_points(p, f));
    EXPECT_TRUE(oracle::check(p, c).ok());
  }
  EXPECT_GT(tried, 10);
}

TEST(FixpointDismantle, Errors) {
  auto p = chain_poset(3);
  auto swap = make_monotone_map(p, [](int x) { return 2 - x; });
  try {
    fixpoint_dismantle(p, swap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::input);
  }
  // Monotone but mixed: 0 goes up, 2 goes down.
  auto mixed = make_monotone_map(p, [](int) { return 1; });
  try {
    fixpoint_dismantle(p, mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
  }
}

TEST(WeakDeletion, PreservesComparabilityCore) {
  std::mt19937_64 rng(oracle::kSeed + 7);
  int deletions = 0;
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_poset(rng, 2 + i % 7, 0.4);
    for (const auto& s : weakly_dismantlable_elements(p)) {
      auto q = p.without(s.deleted);
      auto a = poset_core(p).residual, b = poset_core(q).residual;
      EXPECT_TRUE(are_isomorphic(dismantle_core(comp(a)).residual,
                                 dismantle_core(comp(b)).residual));
      ++deletions;
      break;
    }
  }
  EXPECT_GT(deletions, 50);
}

}  // namespace
