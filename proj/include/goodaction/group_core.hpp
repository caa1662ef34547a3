#pragma once

// Subgroup machinery on Cayley-table groups: commutators, centralizers,
// normalizers, quotients, subgroup lattices, Sylow/Hall subgroups,
// isomorphism testing and the derived/Frattini series.

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "goodaction/config.hpp"
#include "goodaction/group.hpp"
#include "goodaction/primes.hpp"

namespace goodaction {

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
  require(a.parent() == b.parent(), ErrorKind::ParentMismatch, "subgroups live in different groups");
}

// ---------------------------------------------------------------------------
// Elementary subgroup operations

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return subgroup_from_mask(a.parent(), a.mask() & b.mask());
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return closure(a, b.generators());
}

/// H^g = g^-1 H g
inline Subgroup conjugate(const Subgroup& h, Elem g) {
  const Group& G = h.group();
  Mask m = G.empty_mask();
  for (auto i = h.mask().find_first(); i != Mask::npos; i = h.mask().find_next(i)) m.set(G.conj(static_cast<Elem>(i), g));
  std::vector<Elem> gens;
  for (Elem s : h.generators()) gens.push_back(G.conj(s, g));
  return Subgroup(h.parent(), std::move(m), std::move(gens));
}

/// Set product HK as a mask (not necessarily a subgroup).
inline Mask set_product(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& G = h.group();
  Mask m = G.empty_mask();
  const auto ke = k.elements();
  for (auto i = h.mask().find_first(); i != Mask::npos; i = h.mask().find_next(i))
    for (Elem y : ke) m.set(G.mul(static_cast<Elem>(i), y));
  return m;
}

/// Subgroup generated by all [h,k], h in H, k in K.
inline Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& G = h.group();
  std::vector<Elem> seed;
  Mask seen = G.empty_mask();
  const auto ke = k.elements();
  for (auto i = h.mask().find_first(); i != Mask::npos; i = h.mask().find_next(i)) {
    for (Elem y : ke) {
      Elem c = G.comm(static_cast<Elem>(i), y);
      if (!seen.test(c)) {
        seen.set(c);
        seed.push_back(c);
      }
    }
  }
  return closure(h.parent(), seed);
}

inline Subgroup derived_subgroup(const Subgroup& h) { return commutator_subgroup(h, h); }

/// {h in H : hs = sh for all s in S}
inline Subgroup centralizer(const Subgroup& h, const Subgroup& s) {
  require_same_parent(h, s);
  const Group& G = h.group();
  Mask m = G.empty_mask();
  const auto& gens = s.generators();
  for (auto i = h.mask().find_first(); i != Mask::npos; i = h.mask().find_next(i)) {
    const Elem x = static_cast<Elem>(i);
    bool ok = true;
    for (Elem t : gens)
      if (G.mul(x, t) != G.mul(t, x)) {
        ok = false;
        break;
      }
    if (ok) m.set(x);
  }
  return subgroup_from_mask(h.parent(), m);
}

inline Subgroup center(const GroupPtr& g) {
  auto all = whole_group(g);
  return centralizer(all, all);
}

inline bool normalizes(const Subgroup& h, Elem g) {
  const Group& G = h.group();
  for (Elem s : h.generators())
    if (!h.contains(G.conj(s, g))) return false;
  return true;
}

/// N_K(H) = {k in K : H^k = H}
inline Subgroup normalizer_in(const Subgroup& k, const Subgroup& h) {
  require_same_parent(k, h);
  Mask m = k.group().empty_mask();
  for (auto i = k.mask().find_first(); i != Mask::npos; i = k.mask().find_next(i))
    if (normalizes(h, static_cast<Elem>(i))) m.set(i);
  return subgroup_from_mask(h.parent(), m);
}

inline Subgroup normalizer(const Subgroup& h) { return normalizer_in(whole_group(h.parent()), h); }

/// H normal in K (H must lie in K).
inline bool is_normal_in(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (!h.is_subset_of(k)) return false;
  for (Elem g : k.generators())
    if (!normalizes(h, g)) return false;
  return true;
}

inline bool is_normal(const Subgroup& h) { return is_normal_in(h, whole_group(h.parent())); }

/// Smallest normal subgroup of the parent containing `h`.
inline Subgroup normal_closure(const Subgroup& h) {
  const Group& G = h.group();
  Subgroup cur = h;
  for (;;) {
    std::vector<Elem> extra;
    for (Elem s : cur.generators())
      for (Elem g : G.generators()) {
        Elem c = G.conj(s, g);
        if (!cur.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return cur;
    cur = closure(cur, extra);
  }
}

/// Intersection of all conjugates of H in the parent.
inline Subgroup core(const Subgroup& h) {
  const Group& G = h.group();
  Mask m = h.mask();
  for (Elem g = 0; g < G.order(); ++g) m &= conjugate(h, g).mask();
  return subgroup_from_mask(h.parent(), m);
}

// ---------------------------------------------------------------------------
// Subgroups as groups, images and preimages

/// A subgroup materialized as its own Cayley group, with index maps.
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<Elem> to_parent;    // local -> parent
  std::vector<Elem> from_parent;  // parent -> local (kNone outside)
  static constexpr Elem kNone = ~Elem{0};

  Subgroup lift(const Subgroup& local) const {
    Mask m(from_parent.size());
    for (auto i = local.mask().find_first(); i != Mask::npos; i = local.mask().find_next(i)) m.set(to_parent[i]);
    std::vector<Elem> gens;
    for (Elem s : local.generators()) gens.push_back(to_parent[s]);
    return Subgroup(parent, std::move(m), std::move(gens));
  }
  Subgroup restrict(const Subgroup& in_parent) const {
    Mask m(group->order());
    for (auto i = in_parent.mask().find_first(); i != Mask::npos; i = in_parent.mask().find_next(i)) {
      require(from_parent[i] != kNone, ErrorKind::NotASubgroup, "subgroup leaves the embedded group");
      m.set(from_parent[i]);
    }
    return subgroup_from_mask(group, m);
  }
  GroupPtr parent;
};

inline EmbeddedGroup as_group(const Subgroup& h, std::string label = {}) {
  EmbeddedGroup out;
  out.parent = h.parent();
  out.to_parent = h.elements();  // identity first since it is index 0
  out.from_parent.assign(h.group().order(), EmbeddedGroup::kNone);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = static_cast<Elem>(i);
  const std::size_t n = out.to_parent.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a][b] = out.from_parent[h.group().mul(out.to_parent[a], out.to_parent[b])];
  std::vector<Elem> gens;
  for (Elem s : h.generators()) gens.push_back(out.from_parent[s]);
  out.group = Group::from_table(std::move(table), std::move(label), std::move(gens));
  return out;
}

inline Subgroup image(const Homomorphism& phi, const Subgroup& h) {
  Mask m = phi.target()->empty_mask();
  for (auto i = h.mask().find_first(); i != Mask::npos; i = h.mask().find_next(i)) m.set(phi(static_cast<Elem>(i)));
  return subgroup_from_mask(phi.target(), m);
}

inline Subgroup preimage(const Homomorphism& phi, const Subgroup& k) {
  Mask m = phi.source()->empty_mask();
  for (Elem x = 0; x < phi.source()->order(); ++x)
    if (k.contains(phi(x))) m.set(x);
  return subgroup_from_mask(phi.source(), m);
}

// ---------------------------------------------------------------------------
// Quotients

struct Quotient {
  GroupPtr group;
  Homomorphism projection;
  std::vector<Elem> representatives;  // smallest element index in each coset
};

inline Quotient quotient(const Subgroup& n, std::string label = {}) {
  require(is_normal(n), ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const GroupPtr& gp = n.parent();
  const Group& G = *gp;
  const auto ne = n.elements();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(G.order(), kUnset);
  std::vector<Elem> reps;
  for (Elem g = 0; g < G.order(); ++g) {
    if (coset[g] != kUnset) continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(g);
    for (Elem x : ne) coset[G.mul(g, x)] = idx;
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = coset[G.mul(reps[a], reps[b])];
  std::vector<Elem> gens;
  for (Elem s : G.generators())
    if (coset[s] != 0) gens.push_back(coset[s]);
  auto q = Group::from_table(std::move(table), std::move(label), std::move(gens));
  return Quotient{q, Homomorphism(gp, q, std::move(coset)), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Series and invariants

inline std::vector<Subgroup> derived_series(const GroupPtr& g) {
  std::vector<Subgroup> series{whole_group(g)};
  for (;;) {
    Subgroup next = derived_subgroup(series.back());
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_solvable(const GroupPtr& g) { return derived_series(g).back().is_trivial(); }

/// Number of steps for the derived series to reach 1 (or to stabilize).
inline std::size_t derived_length(const GroupPtr& g) { return derived_series(g).size() - 1; }

inline std::vector<Subgroup> lower_central_series(const GroupPtr& g) {
  const Subgroup all = whole_group(g);
  std::vector<Subgroup> series{all};
  for (;;) {
    Subgroup next = commutator_subgroup(series.back(), all);
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_nilpotent(const GroupPtr& g) { return lower_central_series(g).back().is_trivial(); }

inline std::size_t exponent(const GroupPtr& g) {
  std::size_t e = 1;
  for (Elem x = 0; x < g->order(); ++x) e = std::lcm(e, g->element_order(x));
  return e;
}

inline bool is_elementary_abelian(const GroupPtr& g) {
  if (g->order() == 1) return true;
  return g->is_abelian() && is_prime(exponent(g));
}

// ---------------------------------------------------------------------------
// Subgroup lattice

struct MaskHash {
  std::size_t operator()(const Mask& m) const { return boost::hash_value(m); }
};

inline void sort_canonical(std::vector<Subgroup>& v) {
  std::sort(v.begin(), v.end(), [](const Subgroup& a, const Subgroup& b) { return canonical_less(a, b); });
}

/// Every subgroup of a solvable group, ascending by size then by mask.
/// Cyclic extension: each subgroup K > 1 of a solvable group contains a
/// normal subgroup M of prime index, and K = <M, g> for any g in K \ M.
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g, const Bounds& bounds = {}) {
  require(g->order() <= bounds.subgroup_order, ErrorKind::OrderBoundExceeded,
          "all_subgroups: order " + std::to_string(g->order()) + " exceeds bound " + std::to_string(bounds.subgroup_order));
  require(is_solvable(g), ErrorKind::NonSolvableUnsupported, "all_subgroups requires a solvable group");
  const Group& G = *g;
  std::vector<Subgroup> found{trivial_subgroup(g)};
  std::unordered_set<Mask, MaskHash> seen{found.front().mask()};
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    const Subgroup h = found[idx];
    const auto he = h.elements();
    Mask covered = h.mask();
    for (Elem x = 0; x < G.order(); ++x) {
      if (covered.test(x) || !normalizes(h, x)) continue;
      // order of xH in N(H)/H
      std::size_t k = 1;
      Elem y = x;
      while (!h.contains(y)) {
        y = G.mul(y, x);
        ++k;
      }
      if (!is_prime(k)) continue;
      Mask ext = h.mask();
      Elem power = kIdentity;
      for (std::size_t i = 1; i < k; ++i) {
        power = G.mul(power, x);
        for (Elem e : he) ext.set(G.mul(e, power));
      }
      covered |= ext;
      if (seen.insert(ext).second) {
        auto gens = h.generators();
        gens.push_back(x);
        found.emplace_back(g, std::move(ext), std::move(gens));
      }
    }
  }
  sort_canonical(found);
  return found;
}

/// Every normal subgroup, as joins of normal closures of conjugacy classes.
inline std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const Bounds& bounds = {}) {
  require(g->order() <= bounds.subgroup_order, ErrorKind::OrderBoundExceeded,
          "normal_subgroups: order " + std::to_string(g->order()) + " exceeds bound");
  std::vector<Subgroup> base;
  std::unordered_set<Mask, MaskHash> base_seen;
  for (const auto& cls : g->classes()) {
    Subgroup c = closure(g, cls);
    if (base_seen.insert(c.mask()).second) base.push_back(std::move(c));
  }
  std::vector<Subgroup> found{trivial_subgroup(g)};
  std::unordered_set<Mask, MaskHash> seen{found.front().mask()};
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    for (const auto& b : base) {
      if (b.is_subset_of(found[idx])) continue;
      Subgroup j = join(found[idx], b);
      if (seen.insert(j.mask()).second) found.push_back(std::move(j));
    }
  }
  sort_canonical(found);
  return found;
}

/// Subgroups M < G not contained in any other proper subgroup.
inline std::vector<Subgroup> maximal_subgroups(const std::vector<Subgroup>& lattice) {
  std::vector<Subgroup> out;
  if (lattice.empty()) return out;
  const std::size_t n = lattice.back().group().order();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice[i].size() == n) continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < lattice.size() && maximal; ++j)
      if (lattice[j].size() != n && lattice[j].size() > lattice[i].size() && lattice[i].is_subset_of(lattice[j]))
        maximal = false;
    if (maximal) out.push_back(lattice[i]);
  }
  return out;
}

/// Intersection of the maximal subgroups.
inline Subgroup frattini_subgroup(const GroupPtr& g, const Bounds& bounds = {}) {
  if (g->order() == 1) return trivial_subgroup(g);
  Mask m = g->full_mask();
  for (const auto& mx : maximal_subgroups(all_subgroups(g, bounds))) m &= mx.mask();
  return subgroup_from_mask(g, m);
}

// ---------------------------------------------------------------------------
// Sylow and Hall subgroups

/// A Sylow p-subgroup, grown one prime-index step at a time inside
/// normalizers (works for any finite group).
inline Subgroup sylow_subgroup(const GroupPtr& g, std::size_t p) {
  require(is_prime(p), ErrorKind::InvalidArgument, "sylow_subgroup: p must be prime");
  const Group& G = *g;
  const std::size_t target = part_of(G.order(), [p](std::size_t q) { return q == p; });
  Subgroup cur = trivial_subgroup(g);
  while (cur.size() < target) {
    bool grown = false;
    for (Elem x = 0; x < G.order() && !grown; ++x) {
      if (cur.contains(x) || !normalizes(cur, x)) continue;
      if (!cur.contains(G.pow(x, static_cast<long long>(p)))) continue;
      cur = closure(cur, std::vector<Elem>{x});
      grown = true;
    }
    require(grown, ErrorKind::InternalError, "sylow_subgroup failed to extend a non-Sylow p-subgroup");
  }
  return cur;
}

namespace detail {

inline std::optional<Subgroup> hall_search(const GroupPtr& g, const PrimeSet& sigma, std::size_t target,
                                           const Subgroup& h, std::unordered_set<Mask, MaskHash>& visited) {
  if (h.size() == target) return h;
  const Group& G = *g;
  Mask covered = h.mask();
  const auto he = h.elements();
  for (Elem x = 0; x < G.order(); ++x) {
    if (covered.test(x) || !normalizes(h, x)) continue;
    std::size_t k = 1;
    Elem y = x;
    while (!h.contains(y)) {
      y = G.mul(y, x);
      ++k;
    }
    if (!is_prime(k) || !sigma.contains(k)) continue;
    Mask ext = h.mask();
    Elem power = kIdentity;
    for (std::size_t i = 1; i < k; ++i) {
      power = G.mul(power, x);
      for (Elem e : he) ext.set(G.mul(e, power));
    }
    covered |= ext;
    if (target % ext.count() != 0 || !visited.insert(ext).second) continue;
    auto gens = h.generators();
    gens.push_back(x);
    if (auto r = hall_search(g, sigma, target, Subgroup(g, std::move(ext), std::move(gens)), visited)) return r;
  }
  return std::nullopt;
}

}  // namespace detail

/// A Hall sigma-subgroup of a solvable group, found by depth-first cyclic
/// extension through sigma-subgroups.
inline std::optional<Subgroup> hall_subgroup(const GroupPtr& g, const PrimeSet& sigma) {
  require(is_solvable(g), ErrorKind::NonSolvableUnsupported, "hall_subgroup requires a solvable group");
  const std::size_t target = sigma.part(g->order());
  if (target == g->order()) return whole_group(g);
  std::unordered_set<Mask, MaskHash> visited;
  return detail::hall_search(g, sigma, target, trivial_subgroup(g), visited);
}

/// All conjugates of H in the parent, deduplicated, canonical order.
inline std::vector<Subgroup> conjugates(const Subgroup& h) {
  std::vector<Subgroup> out;
  std::unordered_set<Mask, MaskHash> seen;
  for (Elem g = 0; g < h.group().order(); ++g) {
    Subgroup c = conjugate(h, g);
    if (seen.insert(c.mask()).second) out.push_back(std::move(c));
  }
  sort_canonical(out);
  return out;
}

/// Largest normal p-subgroup: intersection of the Sylow p-subgroups.
inline Subgroup p_core(const GroupPtr& g, std::size_t p) {
  if (g->order() % p != 0) return trivial_subgroup(g);
  return core(sylow_subgroup(g, p));
}

// ---------------------------------------------------------------------------
// Isomorphism

struct GroupInvariants {
  std::size_t order = 0;
  std::vector<std::size_t> order_profile;  // sorted element orders
  std::size_t center_size = 0;
  std::size_t derived_length = 0;
  std::size_t exponent = 0;
  std::size_t class_count = 0;
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

inline GroupInvariants invariants(const GroupPtr& g) {
  GroupInvariants inv;
  inv.order = g->order();
  for (Elem x = 0; x < g->order(); ++x) inv.order_profile.push_back(g->element_order(x));
  std::sort(inv.order_profile.begin(), inv.order_profile.end());
  inv.center_size = center(g).size();
  inv.derived_length = derived_length(g);
  inv.exponent = exponent(g);
  inv.class_count = g->classes().size();
  return inv;
}

namespace detail {

// Extends phi over the subgroup generated by gens[0..k) with images imgs;
// false on any inconsistency.
inline bool extend_map(const Group& a, const Group& b, const std::vector<Elem>& gens, const std::vector<Elem>& imgs,
                       std::size_t k, std::vector<Elem>& phi) {
  constexpr Elem kUnset = ~Elem{0};
  std::fill(phi.begin(), phi.end(), kUnset);
  phi[kIdentity] = kIdentity;
  std::vector<Elem> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < k; ++j) {
      const Elem y = a.mul(x, gens[j]);
      const Elem img = b.mul(phi[x], imgs[j]);
      if (phi[y] == kUnset) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return false;
      }
    }
  }
  return true;
}

inline bool iso_search(const Group& a, const Group& b, const std::vector<Elem>& gens, std::vector<Elem>& imgs,
                       std::size_t k, std::vector<Elem>& phi) {
  if (k == gens.size()) {
    if (!extend_map(a, b, gens, imgs, k, phi)) return false;
    Mask seen(b.order());
    for (Elem e : phi) {
      if (seen.test(e)) return false;
      seen.set(e);
    }
    return true;
  }
  for (Elem c = 0; c < b.order(); ++c) {
    if (b.element_order(c) != a.element_order(gens[k])) continue;
    if (b.classes()[b.class_of(c)].size() != a.classes()[a.class_of(gens[k])].size()) continue;
    imgs[k] = c;
    if (!extend_map(a, b, gens, imgs, k + 1, phi)) continue;
    if (iso_search(a, b, gens, imgs, k + 1, phi)) return true;
  }
  return false;
}

}  // namespace detail

/// An isomorphism g1 -> g2 if one exists.
inline std::optional<Homomorphism> is_isomorphic(const GroupPtr& g1, const GroupPtr& g2, const Bounds& bounds = {}) {
  if (g1->order() != g2->order()) return std::nullopt;
  require(g1->order() <= bounds.isomorphism_order, ErrorKind::OrderBoundExceeded,
          "is_isomorphic: order " + std::to_string(g1->order()) + " exceeds bound");
  if (!(invariants(g1) == invariants(g2))) return std::nullopt;
  const auto& gens = g1->generators();
  std::vector<Elem> imgs(gens.size());
  std::vector<Elem> phi(g1->order());
  if (!detail::iso_search(*g1, *g2, gens, imgs, 0, phi)) return std::nullopt;
  return Homomorphism(g1, g2, std::move(phi));
}

inline PrimeSet prime_set(const GroupPtr& g) { return PrimeSet::of_order(g->order()); }

}  // namespace goodaction
