#include <gtest/gtest.h>

#include <cmath>

#include "goodaction/complex_rep.hpp"
#include "goodaction/constructors.hpp"
#include "goodaction/group_expr.hpp"
#include "oracle.hpp"

using namespace goodaction;

namespace {

oracle::Table table_of(const Group& g) {
  oracle::Table t(g.order(), std::vector<std::size_t>(g.order()));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) t[x][y] = g.mul(x, y);
  return t;
}

std::complex<double> numeric(const Cyclotomic& c) {
  const double pi = std::acos(-1.0);
  std::complex<double> s = 0;
  const auto& num = c.numerators();
  for (std::size_t i = 0; i < num.size(); ++i)
    s += num[i].convert_to<double>() * std::polar(1.0, 2 * pi * static_cast<double>(i) / c.conductor());
  return s / c.denominator().convert_to<double>();
}

// numeric copy of a linear character, from its generator values only
std::map<std::size_t, oracle::cd> numeric_lambda(const Group& g, const LinearCharacter& l) {
  const double pi = std::acos(-1.0);
  std::map<std::size_t, oracle::cd> out{{0, 1.0}};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (Elem s : l.domain.generators()) {
      const std::size_t y = g.mul(static_cast<Elem>(x), s);
      if (!out.count(y)) {
        out[y] = out[x] * std::polar(1.0, 2 * pi * l.exponent[s] / l.conductor);
        frontier.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

TEST(ComplexRep, InducedCharactersMatchNumericOracle) {
  for (const char* expr : {"sym(3)", "sym(4)", "sd(cyclic(7),cyclic(3),pow(2))", "named(sl2_3)"}) {
    auto g = parse_group(expr);
    const auto t = table_of(*g);
    std::vector<std::size_t> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    for (const auto& k : all_subgroups(g)) {
      if (g->order() / k.size() > 8) continue;
      for (const auto& lambda : linear_characters(k)) {
        const ComplexRep v = induce_from_linear(g, lambda);
        const Character chi = character_of(v);
        const auto elems = k.elements();
        const auto ref = oracle::induced(t, std::set<std::size_t>(elems.begin(), elems.end()), numeric_lambda(*g, lambda));
        for (Elem x = 0; x < g->order(); ++x) ASSERT_LT(std::abs(numeric(chi(x)) - ref[x]), 1e-9) << expr;
        const auto norm = oracle::inner(ref, ref, all);
        EXPECT_NEAR(norm.real(), inner_product(chi, chi).convert_to<double>(), 1e-9);
      }
    }
  }
}

TEST(ComplexRep, RegularRepresentationDecomposition) {
  auto g = symmetric(3);
  const auto reg = regular_rep(g);
  const auto dec = homogeneous_components(reg, whole_group(g));
  // three irreducibles of degrees 1, 1, 2 with multiplicities equal to degrees
  ASSERT_EQ(dec.components.size(), 3u);
  std::multiset<std::size_t> dims;
  for (const auto& c : dec.components) dims.insert(c.dim());
  EXPECT_EQ(dims, (std::multiset<std::size_t>{1, 1, 4}));
  EXPECT_EQ(fixed_space_dim(reg, whole_group(g)), 1u);
  EXPECT_TRUE(rep_kernel(reg).is_trivial());
}

TEST(ComplexRep, ComponentActionIsTransitiveAndHomomorphic) {
  // F21 acting on its 3-dimensional irreducible, restricted to C7
  auto f = frobenius21();
  const Subgroup c7 = p_core(f, 7);
  const auto lambdas = linear_characters(c7);
  const LinearCharacter* nontrivial = nullptr;
  for (const auto& l : lambdas)
    if (!l.is_trivial()) {
      nontrivial = &l;
      break;
    }
  ASSERT_NE(nontrivial, nullptr);
  const ComplexRep v = induce_from_linear(f, *nontrivial);
  EXPECT_EQ(v.degree(), 3u);
  const auto dec = homogeneous_components(v, c7);
  ASSERT_EQ(dec.components.size(), 3u);
  for (Elem x = 0; x < f->order(); ++x)
    for (Elem y = 0; y < f->order(); ++y) {
      const auto px = component_action(v, dec, x), py = component_action(v, dec, y);
      const auto pxy = component_action(v, dec, f->mul(x, y));
      for (std::size_t i = 0; i < 3; ++i) ASSERT_EQ(pxy[i], px[py[i]]);
    }
  EXPECT_EQ(component_stabilizer(v, dec, 0, whole_group(f)), c7);
}

TEST(ComplexRep, FixedSpaceAgreesWithCharacterAverage) {
  auto g = symmetric(4);
  const auto t = table_of(*g);
  for (const auto& k : all_subgroups(g)) {
    if (g->order() / k.size() > 6) continue;
    for (const auto& lambda : linear_characters(k)) {
      const ComplexRep v = induce_from_linear(g, lambda);
      const auto elems = k.elements();
      const auto ref = oracle::induced(t, std::set<std::size_t>(elems.begin(), elems.end()), numeric_lambda(*g, lambda));
      for (const auto& b : all_subgroups(g)) {
        oracle::cd s = 0;
        for (Elem x : b.elements()) s += ref[x];
        EXPECT_NEAR(s.real() / b.size(), static_cast<double>(fixed_space_dim(v, b)), 1e-9);
      }
    }
  }
}

TEST(ComplexRep, BadInputs) {
  auto g = symmetric(3);
  EXPECT_THROW(make_linear_character(whole_group(g), 3, g->generators(), {1, 1}), Error);
  Bounds tight;
  tight.induction_index = 2;
  const auto l = linear_characters(trivial_subgroup(g)).front();
  try {
    induce_from_linear(g, l, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexBoundExceeded);
  }
}
