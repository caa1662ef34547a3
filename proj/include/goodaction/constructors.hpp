#pragma once

// Concrete groups: cyclic, symmetric, direct and semidirect products, cyclic
// wreath products, SL(2,3), the Frobenius group (C5 x C5) : SL(2,3), the
// extraspecial group of order 27 and exponent 9, and the order-189 group
// R : <sigma, alpha> with its distinguished subgroups.

#include <array>
#include <string>
#include <vector>

#include "goodaction/config.hpp"
#include "goodaction/group.hpp"
#include "goodaction/group_core.hpp"

namespace goodaction {

inline GroupPtr cyclic(std::size_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "cyclic(n) needs n >= 1");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return Group::from_table(std::move(t), "C" + std::to_string(n), std::move(gens));
}

/// Element (a, b) has index a * |G2| + b.
inline GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  const std::size_t n1 = g1->order(), n2 = g2->order(), n = n1 * n2;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = static_cast<Elem>(g1->mul(static_cast<Elem>(x / n2), static_cast<Elem>(y / n2)) * n2 +
                                  g2->mul(static_cast<Elem>(x % n2), static_cast<Elem>(y % n2)));
  std::vector<Elem> gens;
  for (Elem s : g1->generators()) gens.push_back(static_cast<Elem>(s * n2));
  for (Elem s : g2->generators()) gens.push_back(s);
  return Group::from_table(std::move(t), "(" + g1->label() + " x " + g2->label() + ")", std::move(gens));
}

/// Permutations compose left to right: (p*q)(i) = q(p(i)).
inline GroupPtr symmetric(std::size_t n) {
  require(n >= 1 && n <= 5, ErrorKind::InvalidArgument, "symmetric(n) supports 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return Group::from_elements(
      perms,
      [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
        return c;
      },
      "S" + std::to_string(n));
}

/// Result of H : K. Element (h, k) has index h + |H| * k and
/// k h k^-1 = automorphisms[k](h).
struct SemidirectProduct {
  GroupPtr group;
  std::vector<Elem> normal_embedding;      // H -> H:K
  std::vector<Elem> complement_embedding;  // K -> H:K
  std::vector<std::vector<Elem>> automorphisms;  // per element of K, a map on H

  Subgroup normal_subgroup() const { return image_subgroup(normal_embedding); }
  Subgroup complement() const { return image_subgroup(complement_embedding); }

 private:
  Subgroup image_subgroup(const std::vector<Elem>& emb) const {
    return closure(group, std::span<const Elem>(emb.data(), emb.size()));
  }
};

inline bool is_automorphism(const Group& h, const std::vector<Elem>& map) {
  if (map.size() != h.order()) return false;
  Mask seen(h.order());
  for (Elem e : map) {
    if (e >= h.order() || seen.test(e)) return false;
    seen.set(e);
  }
  for (Elem x = 0; x < h.order(); ++x)
    for (Elem y = 0; y < h.order(); ++y)
      if (map[h.mul(x, y)] != h.mul(map[x], map[y])) return false;
  return true;
}

/// Extends an assignment of automorphisms to K's generators to a
/// homomorphism K -> Aut(H); throws NotAHomomorphism if K's relations are
/// violated.
inline std::vector<std::vector<Elem>> extend_to_action(const GroupPtr& h, const GroupPtr& k,
                                                       const std::vector<Elem>& k_generators,
                                                       const std::vector<std::vector<Elem>>& images) {
  require(k_generators.size() == images.size(), ErrorKind::InvalidArgument,
          "one automorphism per generator is required");
  for (const auto& m : images)
    require(is_automorphism(*h, m), ErrorKind::NotAnAutomorphism, "generator image is not an automorphism");
  require(closure(k, k_generators).size() == k->order(), ErrorKind::InvalidArgument,
          "listed elements do not generate the acting group");
  const std::size_t nh = h->order();
  std::vector<std::vector<Elem>> phi(k->order());
  std::vector<Elem> id(nh);
  std::iota(id.begin(), id.end(), Elem{0});
  phi[kIdentity] = id;
  std::vector<Elem> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < k_generators.size(); ++j) {
      const Elem y = k->mul(x, k_generators[j]);
      std::vector<Elem> comp(nh);
      for (Elem v = 0; v < nh; ++v) comp[v] = phi[x][images[j][v]];
      if (phi[y].empty()) {
        phi[y] = std::move(comp);
        queue.push_back(y);
      } else if (phi[y] != comp) {
        fail(ErrorKind::NotAHomomorphism, "generator images violate a relation of the acting group");
      }
    }
  }
  return phi;
}

inline SemidirectProduct semidirect_product(const GroupPtr& h, const GroupPtr& k, const std::vector<Elem>& k_generators,
                                            const std::vector<std::vector<Elem>>& images, std::string label = {},
                                            const Bounds& bounds = {}) {
  const std::size_t nh = h->order(), nk = k->order(), n = nh * nk;
  require(n <= bounds.cayley_order, ErrorKind::OrderBoundExceeded, "semidirect product too large");
  auto phi = extend_to_action(h, k, k_generators, images);
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const Elem h1 = static_cast<Elem>(x % nh), k1 = static_cast<Elem>(x / nh);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem h2 = static_cast<Elem>(y % nh), k2 = static_cast<Elem>(y / nh);
      t[x][y] = static_cast<Elem>(h->mul(h1, phi[k1][h2]) + nh * k->mul(k1, k2));
    }
  }
  SemidirectProduct out;
  std::vector<Elem> gens;
  for (Elem s : h->generators()) gens.push_back(s);
  for (Elem s : k_generators) gens.push_back(static_cast<Elem>(nh * s));
  if (label.empty()) label = "(" + h->label() + " : " + k->label() + ")";
  out.group = Group::from_table(std::move(t), std::move(label), std::move(gens));
  for (Elem x = 0; x < nh; ++x) out.normal_embedding.push_back(x);
  for (Elem x = 0; x < nk; ++x) out.complement_embedding.push_back(static_cast<Elem>(nh * x));
  out.automorphisms = std::move(phi);
  return out;
}

/// Map x -> x^e on an abelian group.
inline std::vector<Elem> power_map(const Group& h, long long e) {
  require(h.is_abelian(), ErrorKind::InvalidArgument, "power maps are automorphisms only of abelian groups here");
  std::vector<Elem> m(h.order());
  for (Elem x = 0; x < h.order(); ++x) m[x] = h.pow(x, e);
  return m;
}

/// G wr C_q: base G^q with C_q rotating coordinates.
inline GroupPtr wreath_cyclic(const GroupPtr& g, std::size_t q, const Bounds& bounds = {}) {
  require(q >= 1, ErrorKind::InvalidArgument, "wreath_cyclic needs q >= 1");
  std::size_t base_order = 1;
  for (std::size_t i = 0; i < q; ++i) {
    base_order *= g->order();
    require(base_order * q <= bounds.cayley_order, ErrorKind::OrderBoundExceeded, "wreath product too large");
  }
  GroupPtr base = cyclic(1);
  for (std::size_t i = 0; i < q; ++i) base = i == 0 ? g : direct_product(base, g);
  // index of (a_0, ..., a_{q-1}) is sum a_i m^{q-1-i}
  const std::size_t m = g->order();
  auto digits = [&](Elem x) {
    std::vector<Elem> d(q);
    for (std::size_t i = q; i-- > 0;) {
      d[i] = static_cast<Elem>(x % m);
      x = static_cast<Elem>(x / m);
    }
    return d;
  };
  auto undigits = [&](const std::vector<Elem>& d) {
    Elem x = 0;
    for (std::size_t i = 0; i < q; ++i) x = static_cast<Elem>(x * m + d[i]);
    return x;
  };
  std::vector<Elem> rot(base->order());
  for (Elem x = 0; x < base->order(); ++x) {
    auto d = digits(x);
    std::vector<Elem> r(q);
    for (std::size_t i = 0; i < q; ++i) r[(i + 1) % q] = d[i];
    rot[x] = undigits(r);
  }
  auto top = cyclic(q);
  std::vector<Elem> top_gens;
  std::vector<std::vector<Elem>> imgs;
  if (q > 1) {
    top_gens.push_back(1);
    imgs.push_back(rot);
  }
  return semidirect_product(base, top, top_gens, imgs, "(" + g->label() + " wr C" + std::to_string(q) + ")", bounds)
      .group;
}

// ---------------------------------------------------------------------------
// 2x2 matrices over a prime field

using Mat2 = std::array<int, 4>;  // row-major a b / c d

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y, int p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p,
          (x[2] * y[1] + x[3] * y[3]) % p};
}

inline std::vector<Mat2> special_linear_2(int p) {
  std::vector<Mat2> out{{1, 0, 0, 1}};
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          Mat2 m{a, b, c, d};
          if (m == Mat2{1, 0, 0, 1}) continue;
          if (((a * d - b * c) % p + p) % p == 1) out.push_back(m);
        }
  return out;
}

/// SL(2,3), enumerated as determinant-one 2x2 matrices over GF(3).
inline GroupPtr sl2_3() {
  return Group::from_elements(special_linear_2(3), [](const Mat2& x, const Mat2& y) { return mat2_mul(x, y, 3); },
                              "SL(2,3)");
}

/// C7 : C3 with the generator acting as r -> r^2 (the Frobenius group of order 21).
inline GroupPtr frobenius21() {
  auto r = cyclic(7), c = cyclic(3);
  return semidirect_product(r, c, {1}, {power_map(*r, 2)}, "F21").group;
}

namespace detail {

// A subgroup of SL(2,5) isomorphic to SL(2,3), as 24 matrices, together with
// an isomorphism from sl2_3() (image of each element).
struct Sl23InSl25 {
  GroupPtr sl23;
  std::vector<Mat2> image;  // image[x] for x in sl23
};

inline Sl23InSl25 sl2_3_in_sl2_5() {
  const auto elems = special_linear_2(5);
  auto sl25 = Group::from_elements(elems, [](const Mat2& x, const Mat2& y) { return mat2_mul(x, y, 5); }, "SL(2,5)");
  // from_elements keeps the identity first and the order otherwise, so
  // index i of sl25 is elems[i].
  auto target = sl2_3();
  for (Elem a = 0; a < sl25->order(); ++a) {
    if (sl25->element_order(a) != 3) continue;
    for (Elem b = 0; b < sl25->order(); ++b) {
      if (sl25->element_order(b) != 4) continue;
      auto h = closure(sl25, {a, b});
      if (h.size() != 24) continue;
      auto emb = as_group(h);
      auto iso = is_isomorphic(target, emb.group);
      if (!iso) continue;
      Sl23InSl25 out;
      out.sl23 = target;
      for (Elem x = 0; x < target->order(); ++x) out.image.push_back(elems[emb.to_parent[(*iso)(x)]]);
      return out;
    }
  }
  fail(ErrorKind::InternalError, "no SL(2,3) inside SL(2,5)");
}

}  // namespace detail

/// (C5 x C5) : SL(2,3), SL(2,3) acting on GF(5)^2 through an embedding in
/// SL(2,5). Kernel element (x, y) has index x + 5y.
inline SemidirectProduct frobenius600_product() {
  auto emb = detail::sl2_3_in_sl2_5();
  auto c5 = cyclic(5);
  auto v = direct_product(c5, c5);  // index a*5 + b, vector (x=b, y=a)
  auto vec_index = [](int x, int y) { return static_cast<Elem>(y * 5 + x); };
  std::vector<std::vector<Elem>> imgs;
  for (Elem s : emb.sl23->generators()) {
    const Mat2& m = emb.image[s];
    std::vector<Elem> map(25);
    for (int y = 0; y < 5; ++y)
      for (int x = 0; x < 5; ++x) map[vec_index(x, y)] = vec_index((m[0] * x + m[1] * y) % 5, (m[2] * x + m[3] * y) % 5);
    imgs.push_back(std::move(map));
  }
  return semidirect_product(v, emb.sl23, emb.sl23->generators(), imgs, "frobenius600");
}

inline GroupPtr frobenius600() { return frobenius600_product().group; }

/// <sigma, alpha : sigma^9 = alpha^3 = 1, alpha sigma alpha^-1 = sigma^4>.
/// sigma is element 1, alpha is element 9.
inline SemidirectProduct extraspecial_27_exp9_product() {
  auto c9 = cyclic(9), c3 = cyclic(3);
  return semidirect_product(c9, c3, {1}, {power_map(*c9, 4)}, "xs27e9");
}

inline GroupPtr extraspecial_27_exp9() { return extraspecial_27_exp9_product().group; }

/// The order-189 group GA = R : S with R = C7 and S the extraspecial group
/// of order 27, sigma acting on R as r -> r^2 and alpha trivially.
struct Example32Group {
  GroupPtr ga;
  Elem r = 0, sigma = 0, alpha = 0;
  Subgroup g;   // R<sigma>, order 63
  Subgroup n;   // R<sigma^3>, order 21
  Subgroup a;   // <alpha>, order 3
  Subgroup z;   // <sigma^3> = Z(S)
  Subgroup s;   // <sigma, alpha>
};

inline Example32Group example_3_2_ga() {
  auto sp = extraspecial_27_exp9_product();
  const GroupPtr& s = sp.group;
  const Elem sigma = sp.normal_embedding[1], alpha = sp.complement_embedding[1];
  auto r = cyclic(7);
  std::vector<Elem> id(7);
  std::iota(id.begin(), id.end(), Elem{0});
  auto ga = semidirect_product(r, s, {sigma, alpha}, {power_map(*r, 2), id}, "ex32_GA");
  Example32Group out;
  out.ga = ga.group;
  out.r = ga.normal_embedding[1];
  out.sigma = ga.complement_embedding[sigma];
  out.alpha = ga.complement_embedding[alpha];
  const Group& G = *out.ga;
  const Elem sigma3 = G.pow(out.sigma, 3);
  out.g = closure(out.ga, {out.r, out.sigma});
  out.n = closure(out.ga, {out.r, sigma3});
  out.a = closure(out.ga, {out.alpha});
  out.z = closure(out.ga, {sigma3});
  out.s = closure(out.ga, {out.sigma, out.alpha});
  require(out.ga->order() == 189 && out.g.size() == 63 && out.n.size() == 21 && out.a.size() == 3,
          ErrorKind::InternalError, "order-189 group has unexpected orders");
  return out;
}

}  // namespace goodaction
