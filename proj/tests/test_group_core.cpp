#include <gtest/gtest.h>

#include "goodaction/constructors.hpp"
#include "goodaction/group_core.hpp"
#include "oracle.hpp"

using namespace goodaction;

namespace {

GroupPtr from_perms(const oracle::PermSet& s) {
  return Group::from_elements(std::vector<oracle::Perm>(s.begin(), s.end()),
                              [](const oracle::Perm& a, const oracle::Perm& b) { return oracle::compose(a, b); });
}

oracle::PermSet s4_perms() { return oracle::generate({oracle::cycle(4, {0, 1}), oracle::cycle(4, {0, 1, 2, 3})}, 4); }

}  // namespace

TEST(GroupCore, CayleyTableAxioms) {
  for (auto g : {cyclic(12), symmetric(4), sl2_3(), frobenius21()}) {
    EXPECT_NO_THROW(g->validate());
    EXPECT_EQ(closure(g, std::span<const Elem>(g->generators())).size(), g->order());
    for (Elem x = 0; x < g->order(); ++x) {
      EXPECT_EQ(g->mul(x, g->inv(x)), kIdentity);
      EXPECT_EQ(g->pow(x, static_cast<long long>(g->element_order(x))), kIdentity);
    }
  }
}

TEST(GroupCore, SubgroupCountsMatchPermutationOracle) {
  const auto s4 = s4_perms();
  const auto lib = all_subgroups(symmetric(4));
  EXPECT_EQ(lib.size(), oracle::subgroups(s4).size());
  EXPECT_EQ(normal_subgroups(symmetric(4)).size(), oracle::normal_subgroups(s4).size());
  const auto c12 = oracle::generate({oracle::cycle(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})}, 12);
  EXPECT_EQ(all_subgroups(cyclic(12)).size(), oracle::subgroups(c12).size());
  // canonical order: nondecreasing size, trivial first, whole last
  for (std::size_t i = 1; i < lib.size(); ++i) EXPECT_LE(lib[i - 1].size(), lib[i].size());
  EXPECT_TRUE(lib.front().is_trivial());
  EXPECT_TRUE(lib.back().is_whole());
}

TEST(GroupCore, PermutationBuiltGroupAgrees) {
  auto g = from_perms(s4_perms());
  EXPECT_EQ(g->order(), 24u);
  EXPECT_TRUE(is_isomorphic(g, symmetric(4)).has_value());
  EXPECT_FALSE(is_isomorphic(sl2_3(), symmetric(4)).has_value());
  EXPECT_EQ(center(g).size(), 1u);
  EXPECT_EQ(derived_subgroup(whole_group(g)).size(), 12u);
}

TEST(GroupCore, SeriesAndPredicates) {
  EXPECT_TRUE(is_solvable(symmetric(4)));
  EXPECT_FALSE(is_nilpotent(symmetric(3)));
  EXPECT_TRUE(is_nilpotent(cyclic(8)));
  EXPECT_EQ(derived_length(symmetric(4)), 3u);
  EXPECT_EQ(exponent(symmetric(4)), 12u);
  EXPECT_TRUE(is_elementary_abelian(direct_product(cyclic(2), cyclic(2))));
  EXPECT_FALSE(is_elementary_abelian(cyclic(4)));
}

TEST(GroupCore, NormalityCentralizersAndCores) {
  auto g = symmetric(4);
  const auto subs = all_subgroups(g);
  for (const auto& h : subs) {
    EXPECT_EQ(is_normal(h), normalizer(h).is_whole());
    EXPECT_TRUE(core(h).is_subset_of(h));
    EXPECT_TRUE(is_normal(core(h)));
    EXPECT_TRUE(is_normal(normal_closure(h)));
    EXPECT_TRUE(h.is_subset_of(normal_closure(h)));
  }
  EXPECT_EQ(frattini_subgroup(g).size(), 1u);
  EXPECT_EQ(frattini_subgroup(cyclic(8)).size(), 4u);
}

TEST(GroupCore, SylowAndHall) {
  auto g = symmetric(4);
  EXPECT_EQ(sylow_subgroup(g, 2).size(), 8u);
  EXPECT_EQ(sylow_subgroup(g, 3).size(), 3u);
  EXPECT_EQ(conjugates(sylow_subgroup(g, 3)).size(), 4u);
  auto f = frobenius21();
  auto h = hall_subgroup(f, PrimeSet{7});
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->size(), 7u);
  EXPECT_EQ(p_core(g, 2).size(), 4u);
}

TEST(GroupCore, QuotientIsHomomorphic) {
  auto g = symmetric(4);
  const auto v4 = p_core(g, 2);
  auto q = quotient(v4);
  EXPECT_EQ(q.group->order(), 6u);
  EXPECT_TRUE(q.projection.is_homomorphism());
  EXPECT_EQ(q.projection.kernel(), v4);
  EXPECT_TRUE(is_isomorphic(q.group, symmetric(3)).has_value());
}

TEST(GroupCore, ParentMismatchIsReported) {
  auto a = cyclic(4), b = cyclic(4);
  try {
    intersection(whole_group(a), whole_group(b));
    FAIL() << "expected ParentMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParentMismatch);
  }
}

TEST(GroupCore, SubgroupBoundIsEnforced) {
  Bounds tight;
  tight.subgroup_order = 10;
  try {
    all_subgroups(symmetric(4), tight);
    FAIL() << "expected OrderBoundExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderBoundExceeded);
  }
}
