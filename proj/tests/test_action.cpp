#include <gtest/gtest.h>

#include <numeric>

#include "goodaction/action.hpp"
#include "goodaction/enumerate.hpp"
#include "goodaction/group_expr.hpp"

using namespace goodaction;

namespace {

// Independent goodness check: every B <= A from all element subsets' closures,
// every B-invariant subgroup H, and H = [H,B] C_H(B) by explicit sets.
bool brute_good(const Action& act) {
  const Group& G = *act.g();
  const Group& A = *act.a();
  std::set<std::vector<bool>> bs;
  for (Elem x = 0; x < A.order(); ++x)
    for (Elem y = 0; y < A.order(); ++y) {
      const auto b = closure(act.a(), {x, y});
      std::vector<bool> m(A.order());
      for (Elem e : b.elements()) m[e] = true;
      bs.insert(m);
    }
  const auto subs = all_subgroups(act.g());
  for (const auto& bm : bs) {
    std::vector<Elem> b;
    for (Elem e = 0; e < A.order(); ++e)
      if (bm[e]) b.push_back(e);
    for (const auto& h : subs) {
      const auto he = h.elements();
      bool inv = true;
      for (Elem s : b)
        for (Elem x : he) inv = inv && h.contains(act.act(s, x));
      if (!inv) continue;
      // [H,B] generated by x^-1 x^b, C_H(B) fixed elements
      std::vector<Elem> comms, fixed;
      for (Elem x : he) {
        bool f = true;
        for (Elem s : b) {
          comms.push_back(G.mul(G.inv(x), act.act(s, x)));
          f = f && act.act(s, x) == x;
        }
        if (f) fixed.push_back(x);
      }
      const auto hb = closure(act.g(), std::span<const Elem>(comms));
      std::set<Elem> prod;
      for (Elem u : hb.elements())
        for (Elem c : fixed) prod.insert(G.mul(u, c));
      if (prod.size() != h.size()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Action, InversionOnC4IsNotGoodWithMinimalWitness) {
  auto g = cyclic(4), a = cyclic(2);
  const Action act = parse_action(g, a, "inv");
  const auto rep = is_good(act);
  EXPECT_FALSE(rep.good);
  ASSERT_TRUE(rep.witness_b && rep.witness_h);
  EXPECT_TRUE(rep.witness_b->is_whole());
  EXPECT_TRUE(rep.witness_h->is_whole());
  EXPECT_EQ(rep.commutator_hb->size(), 2u);
  EXPECT_EQ(rep.centralizer_hb->size(), 2u);
  EXPECT_FALSE(brute_good(act));
}

TEST(Action, GoodnessAgreesWithBruteForceOnAllSmallActions) {
  std::size_t checked = 0;
  for (const char* ge : {"cyclic(4)", "cyclic(6)", "sym(3)", "dp(cyclic(2),cyclic(2))", "cyclic(8)", "cyclic(9)"})
    for (const char* ae : {"cyclic(2)", "cyclic(3)", "cyclic(4)"}) {
      auto g = parse_group(ge), a = parse_group(ae);
      for (const auto& c : all_actions(g, a)) {
        const Action act = parse_action(g, a, c.spec);
        EXPECT_EQ(is_good(act).good, brute_good(act)) << ge << " " << ae << " " << c.spec;
        ++checked;
      }
    }
  EXPECT_GT(checked, 30u);
}

TEST(Action, CoprimeActionsAreGoodAndCommutatorCriterionImplies) {
  for (const char* ge : {"cyclic(7)", "dp(cyclic(2),cyclic(2))", "sym(3)", "dp(cyclic(3),cyclic(3))"})
    for (const char* ae : {"cyclic(2)", "cyclic(3)", "cyclic(5)"}) {
      auto g = parse_group(ge), a = parse_group(ae);
      for (const auto& c : all_actions(g, a)) {
        const Action act = parse_action(g, a, c.spec);
        const bool good = is_good(act).good;
        if (std::gcd(g->order(), a->order()) == 1) EXPECT_TRUE(good);
        if (prop23_criterion(act)) EXPECT_TRUE(good);
      }
    }
}

TEST(Action, ConjugationTablesMatchSemidirectProduct) {
  auto g = parse_group("sym(3)"), a = cyclic(2);
  const Action act = parse_action(g, a, "inner(1)");
  const Group& GA = *act.ga();
  EXPECT_EQ(GA.order(), 12u);
  for (Elem x = 0; x < g->order(); ++x) {
    const Elem ai = act.iota_a(1);
    EXPECT_EQ(GA.mul(GA.mul(ai, x), GA.inv(ai)), act.act(1, x));
  }
}

TEST(Action, FixedPointsAndCommutators) {
  auto g = cyclic(7), a = cyclic(3);
  const Action act = parse_action(g, a, "pow(2)");
  EXPECT_TRUE(fixed_points(act, whole_group(a)).is_trivial());
  EXPECT_TRUE(commutator(act, whole_group(a)).is_whole());
  EXPECT_TRUE(prop23_criterion(act));
  const Action triv = trivial_action(g, a);
  EXPECT_TRUE(fixed_points(triv, whole_group(a)).is_whole());
  EXPECT_TRUE(commutator(triv, whole_group(a)).is_trivial());
}

TEST(Action, InvariantHallSubgroups) {
  auto g = parse_group("sym(4)"), a = cyclic(5);
  const Action act = trivial_action(g, a);
  for (const auto& sigma : prime_set(g).nonempty_subsets()) {
    auto h = invariant_hall(act, sigma);
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(h->size(), sigma.part(24));
    EXPECT_TRUE(act.is_invariant(*h));
  }
  // C3 acting on C2^2 fixed-point-freely: the invariant Sylow 2 is the whole group
  auto v = parse_group("dp(cyclic(2),cyclic(2))");
  const Action c3 = parse_action(v, cyclic(3), "images(1,3)");
  EXPECT_TRUE(invariant_hall(c3, PrimeSet{2})->is_whole());
}

TEST(Action, RegularOrbitsAndWreathFreeness) {
  auto g = cyclic(7), a = cyclic(3);
  EXPECT_TRUE(regular_orbits_check(parse_action(g, a, "pow(2)"), whole_group(a)).ok);
  EXPECT_TRUE(is_cqwrcq_free(cyclic(9)));
  EXPECT_TRUE(is_cqwrcq_free(parse_group("dp(cyclic(3),cyclic(3))")));
  EXPECT_FALSE(is_cqwrcq_free(wreath_cyclic(cyclic(2), 2)));
  EXPECT_FALSE(is_cqwrcq_free(wreath_cyclic(cyclic(3), 3)));
}

TEST(Action, GoodActionConsequences) {
  auto g = parse_group("sym(3)"), a = cyclic(2);
  const Action act = parse_action(g, a, "inner(1)");
  if (is_good(act).good) {
    EXPECT_TRUE(check_prop_2_2(act).all());
  } else {
    EXPECT_THROW(check_prop_2_2(act), Error);
  }
  const Action cop = parse_action(cyclic(7), cyclic(3), "pow(2)");
  EXPECT_TRUE(check_prop_2_2(cop).all());
  EXPECT_TRUE(check_prop_2_5(cop, 7));
}

TEST(Enumerate, AutomorphismGroupOrders) {
  EXPECT_EQ(automorphisms(cyclic(7)).size(), 6u);
  EXPECT_EQ(automorphisms(parse_group("dp(cyclic(2),cyclic(2))")).size(), 6u);
  EXPECT_EQ(automorphisms(parse_group("sym(3)")).size(), 6u);
  EXPECT_EQ(automorphisms(parse_group("dp(cyclic(2),dp(cyclic(2),cyclic(2)))")).size(), 168u);
  EXPECT_EQ(automorphisms(cyclic(8)).size(), 4u);
  // homomorphisms C3 -> Aut(C7) = C6: 3 of them
  EXPECT_EQ(all_actions(cyclic(7), cyclic(3)).size(), 3u);
  // C2 x C2 -> Aut(C2 x C2) = S3: 1 + 3 * 3 = 10
  auto v = parse_group("dp(cyclic(2),cyclic(2))");
  EXPECT_EQ(all_actions(v, v).size(), 10u);
}
