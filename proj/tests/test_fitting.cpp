#include <gtest/gtest.h>

#include "goodaction/enumerate.hpp"
#include "goodaction/fitting.hpp"
#include "goodaction/group_expr.hpp"
#include "oracle.hpp"

using namespace goodaction;
using oracle::cycle;

namespace {

// Cayley table of a permutation group, identity first, for cross-checks.
GroupPtr from_perms(const oracle::PermSet& s) {
  return Group::from_elements(std::vector<oracle::Perm>(s.begin(), s.end()), oracle::compose, "perm");
}

}  // namespace

TEST(Fitting, SmallHeightsAgainstPermutationOracle) {
  const auto c6 = oracle::generate({cycle(6, {0, 1, 2, 3, 4, 5})}, 6);
  const auto s3 = oracle::generate({cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 3);
  const auto s4 = oracle::generate({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})}, 4);
  EXPECT_EQ(oracle::fitting_height(c6), 1);
  EXPECT_EQ(oracle::fitting_height(s3), 2);
  EXPECT_EQ(oracle::fitting_height(s4), 3);
  EXPECT_EQ(fitting_height(cyclic(6)), 1u);
  EXPECT_EQ(fitting_height(symmetric(3)), 2u);
  EXPECT_EQ(fitting_height(symmetric(4)), 3u);
  EXPECT_EQ(fitting_height(from_perms(c6)), 1u);
  EXPECT_EQ(fitting_height(from_perms(s3)), 2u);
  EXPECT_EQ(fitting_height(from_perms(s4)), 3u);
}

TEST(Fitting, SeriesOrdersAgreeWithOracle) {
  for (const char* e : {"sym(4)", "named(sl2_3)", "dp(sym(3),sym(3))", "wr(cyclic(2),3)", "sd(cyclic(7),cyclic(3),pow(2))"}) {
    auto g = parse_group(e);
    // regular permutation representation for the oracle
    std::vector<oracle::Perm> gens;
    for (Elem x : g->generators()) {
      oracle::Perm p(g->order());
      for (Elem y = 0; y < g->order(); ++y) p[y] = static_cast<int>(g->mul(y, x));
      gens.push_back(p);
    }
    const auto perm = oracle::generate(gens, g->order());
    ASSERT_EQ(perm.size(), g->order());
    EXPECT_EQ(static_cast<int>(fitting_height(g)), oracle::fitting_height(perm)) << e;
  }
}

TEST(Fitting, NonSolvableRejected) {
  EXPECT_THROW(fitting_height(symmetric(5)), Error);
}

TEST(Fitting, EllCountsPrimeFactors) {
  EXPECT_EQ(ell(cyclic(12)), 3u);
  EXPECT_EQ(ell(cyclic(1)), 0u);
  auto a = cyclic(8);
  EXPECT_EQ(ell_index(closure(a, {4})), 2u);
}

TEST(Tower, FoundTowersMatchHeightAndExhaustiveSearch) {
  std::size_t checked = 0;
  for (const char* ge : {"sym(3)", "sym(4)", "sd(cyclic(7),cyclic(3),pow(2))", "named(sl2_3)", "dp(sym(3),cyclic(5))"})
    for (const char* ae : {"cyclic(1)", "cyclic(2)", "cyclic(3)"}) {
      auto g = parse_group(ge), a = parse_group(ae);
      for (const auto& c : all_actions(g, a, 6)) {
        const Action act = parse_action(g, a, c.spec);
        if (!is_good(act).good) continue;
        const auto t = find_tower(act);
        EXPECT_EQ(t.height(), fitting_height(g)) << ge << " " << c.spec;
        EXPECT_TRUE(verify_tower(act, t).ok());
        if (g->order() <= 100) EXPECT_EQ(exhaustive_tower(act).height(), fitting_height(g)) << ge << " " << c.spec;
        ++checked;
      }
    }
  EXPECT_GT(checked, 15u);
}

TEST(Tower, BrokenTowersAreRejected) {
  auto g = symmetric(4);
  const Action act = trivial_action(g, cyclic(1));
  auto t = find_tower(act);
  ASSERT_EQ(t.height(), 3u);
  auto bad = t;
  std::swap(bad.s[0], bad.s[1]);
  compute_tower_quotients(bad);
  EXPECT_FALSE(verify_tower(act, bad).ok());
  bad = t;
  bad.s[0] = whole_group(g);
  compute_tower_quotients(bad);
  EXPECT_FALSE(verify_tower(act, bad).ok());
}

TEST(Tower, TowerTermsAreInvariant) {
  auto g = parse_group("sd(cyclic(7),cyclic(3),pow(2))");
  const Action act = parse_action(g, cyclic(3), "inner(7)");
  const auto t = find_tower(act);
  for (const auto& s : t.s) EXPECT_TRUE(act.is_invariant(s));
}
