#include <gtest/gtest.h>

#include <random>
#include <set>

#include "goodaction/constructors.hpp"
#include "goodaction/gf_linear.hpp"

using namespace goodaction;

namespace {

using IntMat = std::vector<std::vector<unsigned>>;

GFMatrix to_gf(const IntMat& m, unsigned p) {
  GFMatrix out(p, m.size(), m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out.set(i, j, m[i][j] % p);
  return out;
}

// all vectors of GF(p)^d as digit vectors
std::vector<std::vector<unsigned>> all_vectors(unsigned p, std::size_t d) {
  std::vector<std::vector<unsigned>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<unsigned> v(d);
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i) v[i] = c % p, c /= p;
    out.push_back(v);
  }
  return out;
}

std::vector<unsigned> times(const std::vector<unsigned>& v, const IntMat& m, unsigned p) {
  std::vector<unsigned> r(m.front().size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = (r[j] + v[i] * m[i][j]) % p;
  return r;
}

// brute force: size of the orbit-closed span of v under the generators
std::size_t spun_size(std::vector<unsigned> v, const std::vector<IntMat>& gens, unsigned p) {
  std::set<std::vector<unsigned>> s{std::vector<unsigned>(v.size(), 0)};
  std::vector<std::vector<unsigned>> frontier{v};
  s.insert(v);
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    std::vector<std::vector<unsigned>> news;
    for (const auto& g : gens) news.push_back(times(x, g, p));
    for (const auto& y : std::vector<std::vector<unsigned>>(s.begin(), s.end())) {
      std::vector<unsigned> z(v.size());
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = (x[i] + y[i]) % p;
      news.push_back(z);
    }
    for (auto& n : news)
      if (s.insert(n).second) frontier.push_back(n);
  }
  return s.size();
}

bool brute_irreducible(const std::vector<IntMat>& gens, unsigned p, std::size_t d) {
  std::size_t full = 1;
  for (std::size_t i = 0; i < d; ++i) full *= p;
  for (const auto& v : all_vectors(p, d)) {
    bool zero = true;
    for (auto x : v) zero = zero && x == 0;
    if (!zero && spun_size(v, gens, p) != full) return false;
  }
  return true;
}

}  // namespace

TEST(GFLinear, RankAndInverseAgainstBruteForce) {
  std::mt19937 rng(11);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int t = 0; t < 20; ++t) {
      IntMat m(3, std::vector<unsigned>(3));
      for (auto& row : m)
        for (auto& x : row) x = rng() % p;
      // brute-force rank: log_p of the row-space size
      std::set<std::vector<unsigned>> span;
      for (const auto& c : all_vectors(p, 3)) span.insert(times(c, m, p));
      std::size_t r = 0, sz = 1;
      while (sz < span.size()) sz *= p, ++r;
      const GFMatrix g = to_gf(m, p);
      EXPECT_EQ(rank(g), r);
      auto inv = inverse(g);
      EXPECT_EQ(inv.has_value(), r == 3);
      if (inv) EXPECT_EQ(g * *inv, GFMatrix::identity(p, 3));
      for (const auto& v : left_nullspace(g)) EXPECT_TRUE((v * g).is_zero());
      EXPECT_EQ(left_nullspace(g).size(), 3 - r);
    }
  }
}

TEST(GFLinear, IrreducibilityMatchesBruteForce) {
  // C7 on GF(2)^3 by a companion matrix of x^3 + x + 1
  IntMat c7{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
  // the permutation module of C3 on GF(2)^3
  IntMat perm{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  // C3 on GF(2)^2
  IntMat c3{{0, 1}, {1, 1}};
  // C4 on GF(3)^2 by [[0,1],[-1,0]], irreducible since x^2+1 has no root mod 3
  IntMat c4{{0, 1}, {2, 0}};
  struct Case {
    GroupPtr g;
    unsigned p;
    IntMat m;
  };
  for (const auto& c : std::vector<Case>{{cyclic(7), 2, c7}, {cyclic(3), 2, perm}, {cyclic(3), 2, c3}, {cyclic(4), 3, c4}}) {
    auto mod = GModule::make(c.g, c.p, {to_gf(c.m, c.p)});
    const bool expected = brute_irreducible({c.m}, c.p, c.m.size());
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      const auto v = is_irreducible(mod, seed);
      EXPECT_EQ(v.irreducible, expected);
      if (!v.irreducible) {
        ASSERT_TRUE(v.witness.has_value());
        EXPECT_TRUE(v.witness->is_proper_nonzero());
        EXPECT_TRUE(v.witness->is_invariant());
      }
    }
  }
}

TEST(GFLinear, ModuleRelationsAreChecked) {
  // a matrix of order 2 cannot represent a generator of C3
  IntMat swap{{0, 1}, {1, 0}};
  EXPECT_THROW(GModule::make(cyclic(3), 2, {to_gf(swap, 2)}), Error);
}

TEST(GFLinear, CompositionFactorsOfPermutationModule) {
  auto g = symmetric(3);
  auto m = permutation_module(trivial_subgroup(g), 2);  // regular module, dim 6
  EXPECT_EQ(m->dim(), 6u);
  std::size_t total = 0;
  for (const auto& f : composition_factors(m)) {
    EXPECT_TRUE(is_irreducible(f).irreducible);
    total += f->dim();
  }
  EXPECT_EQ(total, 6u);
}

TEST(GFLinear, FaithfulIrreducibleModuleForF21) {
  auto f = frobenius21();
  auto res = faithful_irreducible_module(f, 2);
  ASSERT_TRUE(res.module);
  EXPECT_TRUE(res.module->is_faithful());
  EXPECT_EQ(res.module->dim(), 3u);
  // brute-force irreducibility of the generator matrices found
  std::vector<IntMat> gens;
  for (const auto& gm : res.module->generator_matrices()) {
    IntMat m(gm.rows(), std::vector<unsigned>(gm.cols()));
    for (std::size_t i = 0; i < gm.rows(); ++i)
      for (std::size_t j = 0; j < gm.cols(); ++j) m[i][j] = gm.get(i, j);
    gens.push_back(m);
  }
  EXPECT_TRUE(brute_irreducible(gens, 2, 3));
  // O_2(S4) != 1
  EXPECT_THROW(faithful_irreducible_module(symmetric(4), 2), Error);
}

TEST(GFLinear, AffineGroupCommutator) {
  auto f = frobenius21();
  auto mod = faithful_irreducible_module(f, 2).module;
  AffineGroup g(mod);
  EXPECT_EQ(g.order(), BigInt(8 * 21));
  // x = an element of order 3 in the point group
  Elem x = 0;
  for (Elem e = 0; e < f->order(); ++e)
    if (f->element_order(e) == 3) {
      x = e;
      break;
    }
  const auto c = affine_commutator_with(g, g.point(x));
  EXPECT_EQ(c.order * c.quotient_order, g.order() * c.automorphism_order);
  EXPECT_EQ(c.automorphism_order, 3u);
}
