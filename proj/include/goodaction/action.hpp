#pragma once

// Actions of a group A on a group G by automorphisms, realized inside the
// semidirect product GA, together with goodness, commutators, fixed points,
// invariant Hall subgroups, regular orbits and the C_q wr C_q-free test.

#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "goodaction/config.hpp"
#include "goodaction/constructors.hpp"
#include "goodaction/group.hpp"
#include "goodaction/group_core.hpp"
#include "goodaction/primes.hpp"

namespace goodaction {

/// A acting on G. In GA = G : A the element g of G keeps its index and a in A
/// becomes |G| * a; conjugation a g a^-1 in GA equals automorphism(a)[g].
class Action {
 public:
  Action(GroupPtr g, GroupPtr a, const std::vector<Elem>& a_generators,
         const std::vector<std::vector<Elem>>& images, const Bounds& bounds = {})
      : g_(std::move(g)), a_(std::move(a)) {
    auto sp = semidirect_product(g_, a_, a_generators, images, "(" + g_->label() + " : " + a_->label() + ")", bounds);
    ga_ = sp.group;
    auts_ = std::move(sp.automorphisms);
    // tables must agree with conjugation inside GA
    const Group& GA = *ga_;
    for (Elem x = 0; x < a_->order(); ++x) {
      const Elem ax = iota_a(x);
      for (Elem h = 0; h < g_->order(); ++h)
        require(GA.mul(GA.mul(ax, h), GA.inv(ax)) == auts_[x][h], ErrorKind::InternalError,
                "automorphism table disagrees with conjugation in GA");
    }
    lattice_cache_ = std::make_shared<Caches>();
  }

  const GroupPtr& g() const noexcept { return g_; }
  const GroupPtr& a() const noexcept { return a_; }
  const GroupPtr& ga() const noexcept { return ga_; }
  /// image of g under a
  Elem act(Elem a, Elem g) const { return auts_[a][g]; }
  const std::vector<Elem>& automorphism(Elem a) const { return auts_[a]; }

  Elem iota_g(Elem g) const noexcept { return g; }
  Elem iota_a(Elem a) const noexcept { return static_cast<Elem>(a * g_->order()); }
  Subgroup g_in_ga() const {
    Mask m = ga_->empty_mask();
    for (Elem x = 0; x < g_->order(); ++x) m.set(x);
    return subgroup_from_mask(ga_, m);
  }
  Subgroup a_in_ga() const { return to_ga_from_a(whole_group(a_)); }
  Subgroup to_ga_from_g(const Subgroup& h) const {
    Mask m = ga_->empty_mask();
    for (auto i = h.mask().find_first(); i != Mask::npos; i = h.mask().find_next(i)) m.set(i);
    return subgroup_from_mask(ga_, m);
  }
  Subgroup to_ga_from_a(const Subgroup& b) const {
    Mask m = ga_->empty_mask();
    for (auto i = b.mask().find_first(); i != Mask::npos; i = b.mask().find_next(i)) m.set(iota_a(static_cast<Elem>(i)));
    return subgroup_from_mask(ga_, m);
  }
  /// Pulls back a subgroup of GA contained in G.
  Subgroup g_part(const Subgroup& x) const {
    Mask m = g_->empty_mask();
    for (auto i = x.mask().find_first(); i != Mask::npos; i = x.mask().find_next(i)) {
      require(i < g_->order(), ErrorKind::NotASubgroup, "subgroup of GA is not inside G");
      m.set(i);
    }
    return subgroup_from_mask(g_, m);
  }

  bool is_invariant(const Subgroup& h, const Subgroup& b) const {
    for (Elem s : b.generators())
      for (auto x = h.mask().find_first(); x != Mask::npos; x = h.mask().find_next(x))
        if (!h.contains(act(s, static_cast<Elem>(x)))) return false;
    return true;
  }
  bool is_invariant(const Subgroup& h) const { return is_invariant(h, whole_group(a_)); }

  /// Cached subgroup lattices of G and A.
  const std::vector<Subgroup>& g_subgroups(const Bounds& bounds = {}) const {
    std::call_once(lattice_cache_->g_once, [&] { lattice_cache_->g_lattice = all_subgroups(g_, bounds); });
    return lattice_cache_->g_lattice;
  }
  /// Supplies a previously computed lattice of G (e.g. from a disk cache).
  void preload_g_subgroups(std::vector<Subgroup> lattice) const {
    std::call_once(lattice_cache_->g_once, [&] { lattice_cache_->g_lattice = std::move(lattice); });
  }
  const std::vector<Subgroup>& a_subgroups(const Bounds& bounds = {}) const {
    std::call_once(lattice_cache_->a_once, [&] { lattice_cache_->a_lattice = all_subgroups(a_, bounds); });
    return lattice_cache_->a_lattice;
  }

 private:
  struct Caches {
    std::once_flag g_once, a_once;
    std::vector<Subgroup> g_lattice, a_lattice;
  };
  GroupPtr g_, a_, ga_;
  std::vector<std::vector<Elem>> auts_;
  std::shared_ptr<Caches> lattice_cache_;
};

inline Action make_action(GroupPtr g, GroupPtr a, const std::vector<Elem>& a_generators,
                          const std::vector<std::vector<Elem>>& images, const Bounds& bounds = {}) {
  return Action(std::move(g), std::move(a), a_generators, images, bounds);
}

inline Action trivial_action(const GroupPtr& g, const GroupPtr& a) {
  std::vector<Elem> id(g->order());
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<std::vector<Elem>> imgs(a->generators().size(), id);
  return Action(g, a, a->generators(), imgs);
}

/// The automorphism g -> x g x^-1 of G.
inline std::vector<Elem> inner_automorphism(const Group& g, Elem x) {
  std::vector<Elem> m(g.order());
  for (Elem y = 0; y < g.order(); ++y) m[y] = g.mul(g.mul(x, y), g.inv(x));
  return m;
}

/// A = <inner automorphism by x>, realized as a cyclic group of the order of
/// that automorphism.
inline Action inner_action(const GroupPtr& g, Elem x) {
  const Group& G = *g;
  std::size_t m = 1;
  for (Elem y = x;; y = G.mul(y, x), ++m) {
    bool central = true;
    for (Elem s : G.generators())
      if (G.mul(y, s) != G.mul(s, y)) central = false;
    if (central) break;
  }
  return Action(g, cyclic(m), {1}, {inner_automorphism(G, x)});
}

/// The action of a subgroup B of A.
inline Action restrict_actor(const Action& act, const Subgroup& b) {
  require(b.parent() == act.a(), ErrorKind::ParentMismatch, "B is not a subgroup of A");
  auto emb = as_group(b, b.group().label() + "|B");
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> imgs;
  for (Elem s : emb.group->generators()) {
    gens.push_back(s);
    imgs.push_back(act.automorphism(emb.to_parent[s]));
  }
  return Action(act.g(), emb.group, gens, imgs);
}

/// The action on an A-invariant subgroup H of G (restricted to B = A).
inline Action restrict_group(const Action& act, const Subgroup& h) {
  require(act.is_invariant(h), ErrorKind::PreconditionFailed, "subgroup is not A-invariant");
  auto emb = as_group(h);
  std::vector<std::vector<Elem>> imgs;
  for (Elem s : act.a()->generators()) {
    std::vector<Elem> m(emb.group->order());
    for (Elem x = 0; x < emb.group->order(); ++x) m[x] = emb.from_parent[act.act(s, emb.to_parent[x])];
    imgs.push_back(std::move(m));
  }
  return Action(emb.group, act.a(), act.a()->generators(), imgs);
}

/// Induced action on G/N for an A-invariant normal N.
inline Action quotient_action(const Action& act, const Subgroup& n) {
  require(act.is_invariant(n), ErrorKind::PreconditionFailed, "normal subgroup is not A-invariant");
  auto q = quotient(n);
  std::vector<std::vector<Elem>> imgs;
  for (Elem s : act.a()->generators()) {
    std::vector<Elem> m(q.group->order());
    for (Elem c = 0; c < q.group->order(); ++c) m[c] = q.projection(act.act(s, q.representatives[c]));
    imgs.push_back(std::move(m));
  }
  return Action(q.group, act.a(), act.a()->generators(), imgs);
}

// ---------------------------------------------------------------------------
// Fixed points and commutators

/// C_H(B) for a subgroup H of G and B of A.
inline Subgroup fixed_points(const Action& act, const Subgroup& h, const Subgroup& b) {
  Mask m = h.mask();
  for (Elem s : b.generators())
    for (auto x = h.mask().find_first(); x != Mask::npos; x = h.mask().find_next(x))
      if (act.act(s, static_cast<Elem>(x)) != x) m.reset(x);
  return subgroup_from_mask(act.g(), m);
}
inline Subgroup fixed_points(const Action& act, const Subgroup& b) { return fixed_points(act, whole_group(act.g()), b); }

/// [H,B] = <h^-1 h^b>, formed inside GA and pulled back to G.
inline Subgroup commutator(const Action& act, const Subgroup& h, const Subgroup& b) {
  require(b.parent() == act.a() && h.parent() == act.g(), ErrorKind::ParentMismatch, "commutator arguments");
  return act.g_part(commutator_subgroup(act.to_ga_from_g(h), act.to_ga_from_a(b)));
}
inline Subgroup commutator(const Action& act, const Subgroup& b) { return commutator(act, whole_group(act.g()), b); }

/// The same subgroup from the automorphism tables alone.
inline Subgroup commutator_by_tables(const Action& act, const Subgroup& h, const Subgroup& b) {
  const Group& G = *act.g();
  std::vector<Elem> seeds;
  for (Elem s : b.generators())
    for (auto x = h.mask().find_first(); x != Mask::npos; x = h.mask().find_next(x))
      seeds.push_back(G.mul(G.inv(static_cast<Elem>(x)), act.act(s, static_cast<Elem>(x))));
  return closure(act.g(), seeds);
}

// ---------------------------------------------------------------------------
// Goodness

struct GoodnessReport {
  bool good = true;
  std::optional<Subgroup> witness_b;  // in A
  std::optional<Subgroup> witness_h;  // in G
  std::optional<Subgroup> commutator_hb;
  std::optional<Subgroup> centralizer_hb;
  std::size_t product_size = 0;
  std::size_t pairs_checked = 0;
};

namespace detail {
inline std::size_t product_size(const Subgroup& x, const Subgroup& y) { return set_product(x, y).count(); }
}  // namespace detail

/// Checks H = [H,B] C_H(B) for every B <= A and every B-invariant H <= G,
/// both in ascending canonical order; the first failure is reported.
inline GoodnessReport is_good(const Action& act, const Bounds& bounds = {}) {
  require(act.g()->order() <= bounds.subgroup_order && act.a()->order() <= bounds.subgroup_order,
          ErrorKind::OrderBoundExceeded, "goodness check needs subgroup lattices of G and A");
  GoodnessReport out;
  const auto& gl = act.g_subgroups(bounds);
  for (const auto& b : act.a_subgroups(bounds)) {
    if (b.is_trivial()) continue;
    for (const auto& h : gl) {
      if (!act.is_invariant(h, b)) continue;
      ++out.pairs_checked;
      const Subgroup hb = commutator(act, h, b);
      const Subgroup ch = fixed_points(act, h, b);
      const std::size_t ps = detail::product_size(hb, ch);
      if (ps != h.size()) {
        out.good = false;
        out.witness_b = b;
        out.witness_h = h;
        out.commutator_hb = hb;
        out.centralizer_hb = ch;
        out.product_size = ps;
        return out;
      }
    }
  }
  return out;
}

/// gcd(|[G,A]|, |GA : [G,A]|) = 1
inline bool prop23_criterion(const Action& act) {
  const std::size_t c = commutator(act, whole_group(act.a())).size();
  return std::gcd(c, act.ga()->order() / c) == 1;
}

struct ConsequenceReport {
  bool restricted_good = true;
  bool double_commutator = true;
  bool centralizer_quotient = true;
  bool quotient_good = true;
  std::string failure;
  bool all() const { return restricted_good && double_commutator && centralizer_quotient && quotient_good; }
};

/// The four consequences of goodness, checked on every applicable B, H, N.
inline ConsequenceReport check_prop_2_2(const Action& act, const Bounds& bounds = {}) {
  require(is_good(act, bounds).good, ErrorKind::HypothesisFailed, "action is not good");
  ConsequenceReport out;
  const Group& G = *act.g();
  const auto normals = normal_subgroups(act.g(), bounds);
  for (const auto& b : act.a_subgroups(bounds)) {
    auto rb = restrict_actor(act, b);
    for (const auto& h : act.g_subgroups(bounds)) {
      if (!act.is_invariant(h, b)) continue;
      // the B-action on H
      if (out.restricted_good && !is_good(restrict_group(rb, h), bounds).good) {
        out.restricted_good = false;
        out.failure = "restricted action not good";
      }
      // [H,B,B] = [H,B]
      const Subgroup hb = commutator(act, h, b);
      if (!(commutator(act, hb, b) == hb)) {
        out.double_commutator = false;
        out.failure = "[H,B,B] != [H,B]";
      }
      // C_{H/N}(B) = C_H(B)N/N for normal B-invariant N <= H
      const Subgroup ch = fixed_points(act, h, b);
      for (const auto& n : normals) {
        if (!n.is_subset_of(h) || !act.is_invariant(n, b)) continue;
        Mask lhs = G.empty_mask();
        for (auto x = h.mask().find_first(); x != Mask::npos; x = h.mask().find_next(x)) {
          bool fixed = true;
          for (Elem s : b.generators())
            if (!n.contains(G.mul(G.inv(static_cast<Elem>(x)), act.act(s, static_cast<Elem>(x))))) fixed = false;
          if (fixed) lhs.set(x);
        }
        if (lhs != set_product(ch, n)) {
          out.centralizer_quotient = false;
          out.failure = "centralizer of quotient differs";
        }
      }
    }
    // induced action on G/N for each normal B-invariant N
    for (const auto& n : normals) {
      if (n.is_trivial() || !act.is_invariant(n, b)) continue;
      if (!is_good(quotient_action(rb, n), bounds).good) {
        out.quotient_good = false;
        out.failure = "induced action on a quotient not good";
      }
    }
  }
  return out;
}

/// p does not divide |[G,B]| for every p-subgroup B of A.
inline bool check_prop_2_5(const Action& act, std::size_t p, const Bounds& bounds = {}) {
  require(is_good(act, bounds).good, ErrorKind::HypothesisFailed, "action is not good");
  require(is_solvable(act.g()), ErrorKind::HypothesisFailed, "G is not p-solvable");
  for (const auto& b : act.a_subgroups(bounds)) {
    if (!is_prime_power(b.size()) || b.size() % p != 0) continue;
    if (commutator(act, b).size() % p == 0) return false;
  }
  return true;
}

/// An A-invariant Hall sigma-subgroup of G, searched among the conjugates of
/// one Hall subgroup.
inline std::optional<Subgroup> invariant_hall(const Action& act, const PrimeSet& sigma) {
  require(is_solvable(act.g()), ErrorKind::NonSolvableUnsupported, "Hall subgroups need a solvable group");
  auto h = hall_subgroup(act.g(), sigma);
  if (!h) return std::nullopt;
  for (const auto& c : conjugates(*h))
    if (act.is_invariant(c)) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Regular orbits

struct RegularOrbitsReport {
  bool ok = true;
  std::size_t sections_checked = 0;
  std::optional<Subgroup> witness_h, witness_k;  // failing section H/K
};

/// For each B-invariant section H/K of G on which B acts irreducibly, some
/// coset xK has C_B(xK) = C_B(H/K).
inline RegularOrbitsReport regular_orbits_check(const Action& act, const Subgroup& b, const Bounds& bounds = {}) {
  RegularOrbitsReport out;
  if (b.is_trivial()) return out;
  const Group& G = *act.g();
  std::vector<Subgroup> inv;
  for (const auto& h : act.g_subgroups(bounds))
    if (act.is_invariant(h, b)) inv.push_back(h);
  const auto belems = b.elements();
  for (const auto& h : inv) {
    for (const auto& k : inv) {
      if (k.size() >= h.size() || !k.is_subset_of(h) || !is_normal_in(k, h)) continue;
      bool irreducible = true;
      for (const auto& l : inv)
        if (l.size() > k.size() && l.size() < h.size() && k.is_subset_of(l) && l.is_subset_of(h)) {
          irreducible = false;
          break;
        }
      if (!irreducible) continue;
      ++out.sections_checked;
      // C_B(xK) for each x in H, as masks over B
      auto stab = [&](Elem x) {
        Mask m = b.mask();
        for (Elem a : belems)
          if (!k.contains(G.mul(G.inv(x), act.act(a, x)))) m.reset(a);
        return m;
      };
      Mask all = b.mask();
      std::vector<Mask> per;
      for (auto x = h.mask().find_first(); x != Mask::npos; x = h.mask().find_next(x)) {
        per.push_back(stab(static_cast<Elem>(x)));
        all &= per.back();
      }
      bool found = false;
      for (const auto& m : per)
        if (m == all) {
          found = true;
          break;
        }
      if (!found) {
        out.ok = false;
        out.witness_h = h;
        out.witness_k = k;
        return out;
      }
    }
  }
  return out;
}

/// No section of A is isomorphic to C_q wr C_q.
inline bool is_cqwrcq_free(const GroupPtr& a, const Bounds& bounds = {}) {
  const std::size_t n = a->order();
  std::vector<Subgroup> lattice;
  bool have_lattice = false;
  for (std::size_t q : prime_divisors(n)) {
    std::size_t target = 1;
    for (std::size_t i = 0; i <= q; ++i) target *= q;
    if (n % target != 0) continue;
    if (!have_lattice) {
      lattice = all_subgroups(a, bounds);
      have_lattice = true;
    }
    const auto wreath = wreath_cyclic(cyclic(q), q, bounds);
    for (const auto& h : lattice) {
      if (h.size() % target != 0) continue;
      auto emb = as_group(h);
      for (const auto& k : normal_subgroups(emb.group, bounds)) {
        if (h.size() / k.size() != target) continue;
        auto qg = quotient(k);
        if (is_isomorphic(qg.group, wreath, bounds)) return false;
      }
    }
  }
  return true;
}

}  // namespace goodaction
