#include <gtest/gtest.h>

#include "goodaction/constructors.hpp"
#include "goodaction/group_core.hpp"
#include "goodaction/group_expr.hpp"
#include "oracle.hpp"

using namespace goodaction;

TEST(Constructors, Orders) {
  EXPECT_EQ(cyclic(1)->order(), 1u);
  EXPECT_EQ(direct_product(cyclic(3), cyclic(4))->order(), 12u);
  EXPECT_EQ(symmetric(5)->order(), 120u);
  EXPECT_EQ(wreath_cyclic(cyclic(2), 2)->order(), 8u);
  EXPECT_EQ(wreath_cyclic(cyclic(3), 3)->order(), 81u);
  EXPECT_EQ(sl2_3()->order(), 24u);
  EXPECT_EQ(frobenius600()->order(), 600u);
}

TEST(Constructors, SemidirectProductMatchesPermutationModel) {
  // C7 : C3 as <(0..6), x -> 2x mod 7> on 7 points
  oracle::Perm r = oracle::cycle(7, {0, 1, 2, 3, 4, 5, 6});
  oracle::Perm m(7);
  for (int i = 0; i < 7; ++i) m[i] = (2 * i) % 7;
  const auto perm = oracle::generate({r, m}, 7);
  auto f = frobenius21();
  EXPECT_EQ(f->order(), perm.size());
  EXPECT_EQ(all_subgroups(f).size(), oracle::subgroups(perm).size());
  EXPECT_EQ(center(f).size(), 1u);
  EXPECT_FALSE(f->is_abelian());
}

TEST(Constructors, ExtendToActionRejectsBadRelations) {
  auto h = cyclic(7), k = cyclic(2);
  // x -> 2x has order 3, not compatible with C2
  try {
    extend_to_action(h, k, {1}, {power_map(*h, 2)});
    FAIL() << "expected NotAHomomorphism";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
  }
}

TEST(Constructors, WreathProductIsNotCqWrCqFreeWitness) {
  auto w = wreath_cyclic(cyclic(2), 2);
  EXPECT_TRUE(is_isomorphic(w, parse_group("sd(cyclic(4),cyclic(2),inv)")).has_value());  // D8
}

TEST(Constructors, ExtraspecialOfExponentNine) {
  auto s = extraspecial_27_exp9();
  EXPECT_EQ(s->order(), 27u);
  const auto z = center(s);
  EXPECT_EQ(z.size(), 3u);
  EXPECT_EQ(derived_subgroup(whole_group(s)), z);
  EXPECT_EQ(frattini_subgroup(s), z);
  EXPECT_EQ(exponent(s), 9u);
}

TEST(Constructors, SL23HasQuaternionSylow) {
  auto g = sl2_3();
  const auto p = sylow_subgroup(g, 2);
  EXPECT_EQ(p.size(), 8u);
  auto q8 = as_group(p).group;
  std::size_t involutions = 0;
  for (Elem x = 0; x < q8->order(); ++x) involutions += q8->element_order(x) == 2;
  EXPECT_EQ(involutions, 1u);
  EXPECT_EQ(center(g).size(), 2u);
}

TEST(Constructors, Frobenius600Kernel) {
  auto f = frobenius600();
  const auto k = p_core(f, 5);
  EXPECT_EQ(k.size(), 25u);
  EXPECT_TRUE(as_group(k).group->is_abelian());
  EXPECT_TRUE(p_core(f, 2).is_trivial());
}

TEST(GroupExpressions, ParseAndCanonicalForm) {
  EXPECT_EQ(parse_term(" sd( cyclic(7) , cyclic(3), pow(2) ) ").canonical(), "sd(cyclic(7),cyclic(3),pow(2))");
  EXPECT_EQ(parse_group("dp(cyclic(2),sym(3))")->order(), 12u);
  EXPECT_EQ(parse_group("wr(cyclic(3),2)")->order(), 18u);
  EXPECT_EQ(parse_group("named(sl2_3)")->order(), 24u);
  EXPECT_EQ(expression_hash("cyclic( 4 )"), expression_hash("cyclic(4)"));
  EXPECT_NE(expression_hash("cyclic(4)"), expression_hash("cyclic(5)"));
}

TEST(GroupExpressions, Errors) {
  for (const char* bad : {"cyclic(", "foo(2)", "cyclic(0)", "sd(cyclic(7),cyclic(2),pow(2))", "named(nope)", "3"}) {
    EXPECT_THROW(parse_group(bad), Error) << bad;
  }
  Bounds tight;
  tight.cayley_order = 50;
  try {
    parse_group("cyclic(100)", tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderBoundExceeded);
  }
}
