#pragma once

// Per-theorem verifiers over corpus instances. Each verifier checks the
// hypotheses mechanically, in order, and evaluates the conclusion only when
// all of them hold.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "goodaction/action.hpp"
#include "goodaction/complex_rep.hpp"
#include "goodaction/corpus.hpp"
#include "goodaction/fitting.hpp"
#include "goodaction/gf_linear.hpp"
#include "goodaction/group_expr.hpp"
#include "goodaction/report.hpp"

namespace goodaction {

/// splitmix64 step, used to derive per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t instance_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = seed;
  for (unsigned char c : id) h = mix_seed(h ^ c);
  return h;
}

/// A corpus instance with its groups, action and optional data built, and
/// memoized invariants shared by the verifiers.
class InstanceData {
 public:
  CorpusInstance spec;
  Bounds bounds;
  std::uint64_t seed = 0;
  std::optional<Action> act;
  Subgroup b;                          // in A; trivial unless given
  std::optional<ComplexRep> rep;       // of GA
  std::optional<Subgroup> normal;      // in GA
  GroupPtr affine_h;                   // affine instances only

  bool is_affine() const { return spec.affine.has_value(); }
  const Action& action() const {
    require(act.has_value(), ErrorKind::OrderBoundExceeded,
            "instance '" + spec.id + "' is affine-represented; no Cayley table of G is built");
    return *act;
  }

  const GoodnessReport& goodness() {
    if (!good_) good_ = is_good(action(), bounds);
    return *good_;
  }
  bool g_solvable() {
    if (!g_solvable_) g_solvable_ = is_solvable(action().g());
    return *g_solvable_;
  }
  bool a_solvable() {
    if (!a_solvable_) a_solvable_ = is_solvable(action().a());
    return *a_solvable_;
  }
  bool a_nilpotent() {
    if (!a_nilpotent_) a_nilpotent_ = is_nilpotent(action().a());
    return *a_nilpotent_;
  }
  const Subgroup& cga() {
    if (!cga_) cga_ = fixed_points(action(), whole_group(action().a()));
    return *cga_;
  }
  std::size_t h_g() {
    if (!h_g_) h_g_ = fitting_height(action().g());
    return *h_g_;
  }
  std::size_t h_cga() {
    if (!h_cga_) h_cga_ = fitting_height(as_group(cga()).group);
    return *h_cga_;
  }

 private:
  std::optional<GoodnessReport> good_;
  std::optional<bool> g_solvable_, a_solvable_, a_nilpotent_;
  std::optional<Subgroup> cga_;
  std::optional<std::size_t> h_g_, h_cga_;
};

inline InstanceData build_instance(const CorpusInstance& ci, const Bounds& bounds, std::uint64_t seed) {
  InstanceData d;
  d.spec = ci;
  d.bounds = bounds;
  d.seed = instance_seed(seed, ci.id);
  if (ci.affine) {
    d.affine_h = parse_group(ci.affine->h, bounds);
    require(is_prime(ci.affine->p), ErrorKind::InvalidArgument, "affine.p must be prime");
    if (ci.affine->x)
      require(*ci.affine->x < d.affine_h->order(), ErrorKind::InvalidArgument, "affine.x outside H");
    return d;
  }
  auto g = parse_group(ci.g, bounds);
  auto a = parse_group(ci.a, bounds);
  d.act = parse_action(g, a, ci.action, bounds);
  const Action& act = *d.act;
  d.b = trivial_subgroup(a);
  if (ci.b) {
    for (Elem x : *ci.b)
      require(x < a->order(), ErrorKind::InvalidArgument, "b lists an element outside A");
    d.b = closure(a, std::span<const Elem>(ci.b->data(), ci.b->size()));
  }
  const GroupPtr& ga = act.ga();
  if (ci.rep) {
    for (Elem x : ci.rep->subgroup)
      require(x < ga->order(), ErrorKind::InvalidArgument, "rep.subgroup lists an element outside GA");
    auto k = closure(ga, std::span<const Elem>(ci.rep->subgroup.data(), ci.rep->subgroup.size()));
    auto lambda = make_linear_character(k, ci.rep->conductor, ci.rep->subgroup, ci.rep->exponents);
    d.rep = induce_from_linear(ga, lambda, bounds);
  }
  if (ci.normal) {
    for (Elem x : *ci.normal)
      require(x < ga->order(), ErrorKind::InvalidArgument, "normal lists an element outside GA");
    d.normal = closure(ga, std::span<const Elem>(ci.normal->data(), ci.normal->size()));
    require(is_normal(*d.normal), ErrorKind::InvalidArgument, "normal does not generate a normal subgroup of GA");
  }
  return d;
}

namespace detail {

inline std::pair<bool, std::string> verdict_of(bool ok, std::string detail = {}) { return {ok, std::move(detail)}; }

inline std::string order_text(const Subgroup& s) { return "order " + std::to_string(s.size()); }

inline TheoremReport start(const std::string& theorem, const InstanceData& d, std::string conclusion) {
  TheoremReport r;
  r.theorem = theorem;
  r.instance = d.spec.id;
  r.conclusion = std::move(conclusion);
  return r;
}

inline void check_good(Checklist& c, InstanceData& d) {
  c.check("action is good", [&] {
    const auto& g = d.goodness();
    if (g.good) return verdict_of(true, std::to_string(g.pairs_checked) + " pairs (B,H) checked");
    return verdict_of(false, "H = [H,B]C_H(B) fails for |B| = " + std::to_string(g.witness_b->size()) +
                                 ", |H| = " + std::to_string(g.witness_h->size()));
  });
}

inline void check_g_solvable(Checklist& c, InstanceData& d) {
  c.check("G solvable", [&] { return verdict_of(d.g_solvable()); });
}

inline void check_a_nilpotent(Checklist& c, InstanceData& d) {
  c.check("A nilpotent", [&] { return verdict_of(d.a_nilpotent()); });
}

inline void check_fpf(Checklist& c, InstanceData& d) {
  c.check("C_G(A) = 1", [&] { return verdict_of(d.cga().is_trivial(), "|C_G(A)| = " + std::to_string(d.cga().size())); });
}

// Permutation of the homogeneous components by every element of GA, from the
// generator permutations (result[g][i] = index of g W_i).
inline std::vector<std::vector<std::size_t>> component_permutations(const ComplexRep& rep,
                                                                    const HomogeneousDecomposition& dec) {
  const Group& GA = *rep.group();
  const std::size_t k = dec.components.size();
  std::vector<std::vector<std::size_t>> perm(GA.order());
  std::vector<std::size_t> id(k);
  std::iota(id.begin(), id.end(), std::size_t{0});
  perm[kIdentity] = id;
  std::vector<std::vector<std::size_t>> gen_perm;
  for (Elem s : GA.generators()) gen_perm.push_back(component_action(rep, dec, s));
  std::vector<Elem> queue{kIdentity};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elem x = queue[q];
    for (std::size_t j = 0; j < GA.generators().size(); ++j) {
      const Elem y = GA.mul(x, GA.generators()[j]);
      std::vector<std::size_t> p(k);
      for (std::size_t i = 0; i < k; ++i) p[i] = perm[x][gen_perm[j][i]];
      if (perm[y].empty()) {
        perm[y] = std::move(p);
        queue.push_back(y);
      } else {
        require(perm[y] == p, ErrorKind::InternalError, "component permutations are not a homomorphism");
      }
    }
  }
  return perm;
}

inline Subgroup component_stabilizer_in(const std::vector<std::vector<std::size_t>>& perm, std::size_t i,
                                        const Subgroup& h) {
  Mask m = h.group().empty_mask();
  for (auto x = h.mask().find_first(); x != Mask::npos; x = h.mask().find_next(x))
    if (perm[x][i] == i) m.set(x);
  return subgroup_from_mask(h.parent(), m);
}

/// GA-normal subgroups N of GA inside G with G/N a GA-chief factor.
inline std::vector<Subgroup> chief_factor_bottoms(const Action& act, const Bounds& bounds) {
  const Subgroup g = act.g_in_ga();
  std::vector<Subgroup> inside;
  for (const auto& n : normal_subgroups(act.ga(), bounds))
    if (n.is_subset_of(g)) inside.push_back(n);
  std::vector<Subgroup> out;
  for (const auto& n : inside) {
    if (n.size() == g.size()) continue;
    bool maximal = true;
    for (const auto& m : inside)
      if (m.size() > n.size() && m.size() < g.size() && n.is_subset_of(m)) maximal = false;
    if (maximal) out.push_back(n);
  }
  return out;
}

/// The prime r when G/N is an elementary abelian r-group.
inline std::optional<std::size_t> elementary_abelian_prime(const Subgroup& g, const Subgroup& n) {
  const std::size_t idx = g.size() / n.size();
  if (!is_prime_power(idx)) return std::nullopt;
  const std::size_t r = prime_divisors(idx).front();
  const Group& GA = g.group();
  for (Elem x : g.generators()) {
    if (!n.contains(GA.pow(x, static_cast<long long>(r)))) return std::nullopt;
    for (Elem y : g.generators())
      if (!n.contains(GA.comm(x, y))) return std::nullopt;
  }
  return r;
}

struct HallSearch {
  bool found = false;
  std::size_t searched = 0;
  std::size_t hall_order = 0;
};

/// Searches every Hall r'-subgroup of GA for one normalized by A.
inline HallSearch a_normalized_hall(const Action& act, std::size_t r) {
  HallSearch out;
  const GroupPtr& ga = act.ga();
  PrimeSet rprime;
  for (std::size_t p : prime_divisors(ga->order()))
    if (p != r) rprime.insert(p);
  auto h = hall_subgroup(ga, rprime);
  if (!h) return out;
  out.hall_order = h->size();
  const Subgroup a = act.a_in_ga();
  for (const auto& c : conjugates(*h)) {
    ++out.searched;
    bool ok = true;
    for (Elem s : a.generators())
      if (!normalizes(c, s)) ok = false;
    if (ok) {
      out.found = true;
      return out;
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Goodness and its criteria

inline TheoremReport verify_goodness(InstanceData& d) {
  auto r = detail::start("goodness", d, "is_good agrees with the instance tags; coprime actions are good");
  if (d.is_affine())
    fail(ErrorKind::OrderBoundExceeded, "direct goodness check refused for an affine-represented instance");
  Checklist c(r);
  c.check("lattices of G and A within bounds", [&] {
    return detail::verdict_of(d.action().g()->order() <= d.bounds.subgroup_order &&
                              d.action().a()->order() <= d.bounds.subgroup_order);
  });
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  const Action& act = d.action();
  const auto& g = d.goodness();
  const std::size_t ng = act.g()->order(), na = act.a()->order();
  const bool coprime = std::gcd(ng, na) == 1;
  r.witnesses["good"] = g.good;
  r.witnesses["pairs_checked"] = g.pairs_checked;
  r.witnesses["coprime"] = coprime;
  r.witnesses["fixed_point_free"] = d.cga().is_trivial();
  if (!g.good) {
    r.witnesses["b"] = subgroup_json(*g.witness_b);
    r.witnesses["h"] = subgroup_json(*g.witness_h);
    r.witnesses["commutator_hb_order"] = g.commutator_hb->size();
    r.witnesses["centralizer_hb_order"] = g.centralizer_hb->size();
    r.witnesses["product_size"] = g.product_size;
  }
  std::vector<std::string> problems;
  if (d.spec.has_tag("expected-good") && !g.good) problems.push_back("tagged expected-good but not good");
  if (d.spec.has_tag("expected-not-good") && g.good) problems.push_back("tagged expected-not-good but good");
  if (coprime && !g.good) problems.push_back("coprime action is not good");
  if (d.spec.has_tag("coprime") && !coprime) problems.push_back("tagged coprime but gcd(|G|,|A|) > 1");
  if (d.spec.has_tag("fpf") && !d.cga().is_trivial()) problems.push_back("tagged fpf but C_G(A) > 1");
  std::string detail;
  for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
  c.conclude(problems.empty(), detail);
  return r;
}

inline TheoremReport verify_prop23(InstanceData& d) {
  auto r = detail::start("prop23", d, "gcd(|[G,A]|, |GA:[G,A]|) = 1 implies the action is good");
  Checklist c(r);
  c.check("lattices of G and A within bounds", [&] {
    return detail::verdict_of(d.action().g()->order() <= d.bounds.subgroup_order &&
                              d.action().a()->order() <= d.bounds.subgroup_order);
  });
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  const Action& act = d.action();
  const std::size_t k = commutator(act, whole_group(act.a())).size();
  const std::size_t q = act.ga()->order() / k;
  const bool crit = std::gcd(k, q) == 1;
  r.witnesses["commutator_order"] = k;
  r.witnesses["quotient_order"] = q;
  r.witnesses["criterion"] = crit;
  r.witnesses["good"] = d.goodness().good;
  c.conclude(!crit || d.goodness().good);
  return r;
}

inline TheoremReport verify_invariant_hall(InstanceData& d) {
  auto r = detail::start("invariant_hall", d, "an A-invariant Hall sigma-subgroup exists for every nonempty sigma");
  Checklist c(r);
  detail::check_a_nilpotent(c, d);
  detail::check_g_solvable(c, d);
  detail::check_good(c, d);
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  const Action& act = d.action();
  bool all = true;
  std::string missing;
  Json per = Json::array();
  for (const auto& sigma : prime_set(act.g()).nonempty_subsets()) {
    auto h = invariant_hall(act, sigma);
    Json e;
    e["sigma"] = sigma.to_string();
    const bool ok = h && h->size() == sigma.part(act.g()->order()) && act.is_invariant(*h);
    e["found"] = ok;
    if (h) e["order"] = h->size();
    if (!ok) {
      all = false;
      missing += (missing.empty() ? "" : ", ") + sigma.to_string();
    }
    per.push_back(std::move(e));
  }
  r.witnesses["halls"] = std::move(per);
  c.conclude(all, all ? "" : "no A-invariant Hall subgroup for " + missing);
  return r;
}

inline TheoremReport verify_tower_height(InstanceData& d) {
  auto r = detail::start("tower", d, "find_tower gives an A-tower of height h(G); no A-tower is taller (|G| <= 100)");
  Checklist c(r);
  detail::check_g_solvable(c, d);
  detail::check_a_nilpotent(c, d);
  c.check("|G| <= tower search bound",
          [&] { return detail::verdict_of(d.action().g()->order() <= d.bounds.tower_exhaustive_order); });
  detail::check_good(c, d);
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  const Action& act = d.action();
  const auto t = find_tower(act, d.bounds);
  const auto tr = verify_tower(act, t);
  const std::size_t h = d.h_g();
  r.witnesses["fitting_height"] = h;
  r.witnesses["tower_height"] = t.height();
  r.witnesses["tower_method"] = t.method;
  r.witnesses["tower_primes"] = t.primes;
  Json orders = Json::array();
  for (const auto& s : t.s) orders.push_back(s.size());
  r.witnesses["tower_orders"] = std::move(orders);
  bool ok = tr.ok() && t.height() == h;
  std::string why = tr.ok() ? "" : tr.failure();
  if (act.g()->order() <= 100) {
    const auto e = exhaustive_tower(act, d.bounds);
    r.witnesses["exhaustive_height"] = e.height();
    if (e.height() != h) {
      ok = false;
      why = "exhaustive search found height " + std::to_string(e.height());
    }
  } else {
    r.witnesses["exhaustive_height"] = nullptr;
  }
  c.conclude(ok, why);
  return r;
}

// ---------------------------------------------------------------------------
// Fitting height inequalities

inline void record_heights(TheoremReport& r, InstanceData& d) {
  r.witnesses["h_G"] = d.h_g();
  r.witnesses["h_CGA"] = d.h_cga();
  r.witnesses["CGA_order"] = d.cga().size();
  r.witnesses["ell_A"] = ell(d.action().a());
}

inline TheoremReport verify_thm_2_9(InstanceData& d) {
  auto r = detail::start("thm_2_9", d, "h(G) <= h(C_G(A)) + 4");
  Checklist c(r);
  c.check("|A| prime", [&] { return detail::verdict_of(is_prime(d.action().a()->order())); });
  detail::check_g_solvable(c, d);
  c.check("|C_G(A)| odd", [&] { return detail::verdict_of(d.cga().size() % 2 == 1, detail::order_text(d.cga())); });
  detail::check_good(c, d);
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  record_heights(r, d);
  c.conclude(d.h_g() <= d.h_cga() + 4);
  return r;
}

inline TheoremReport verify_thm_2_10(InstanceData& d) {
  auto r = detail::start("thm_2_10", d, "h(G) <= h(C_G(A)) + 4 l(A)");
  Checklist c(r);
  c.check("A solvable", [&] { return detail::verdict_of(d.a_solvable()); });
  detail::check_g_solvable(c, d);
  c.check("|C_G(B)| odd for every nontrivial B <= A", [&] {
    for (const auto& b : d.action().a_subgroups(d.bounds)) {
      if (b.is_trivial()) continue;
      const auto cb = fixed_points(d.action(), b);
      if (cb.size() % 2 == 0)
        return detail::verdict_of(false, "|B| = " + std::to_string(b.size()) + " has |C_G(B)| = " +
                                             std::to_string(cb.size()));
    }
    return detail::verdict_of(true);
  });
  detail::check_good(c, d);
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  record_heights(r, d);
  c.conclude(d.h_g() <= d.h_cga() + 4 * ell(d.action().a()));
  return r;
}

inline TheoremReport verify_cor_2_11(InstanceData& d) {
  auto r = detail::start("cor_2_11", d, "h(G) <= h(C_G(A)) + 4 l(A)");
  Checklist c(r);
  c.check("A solvable", [&] { return detail::verdict_of(d.a_solvable()); });
  c.check("|G| odd", [&] { return detail::verdict_of(d.action().g()->order() % 2 == 1); });
  detail::check_g_solvable(c, d);
  detail::check_good(c, d);
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  record_heights(r, d);
  c.conclude(d.h_g() <= d.h_cga() + 4 * ell(d.action().a()));
  return r;
}

inline TheoremReport verify_thm_4_2(InstanceData& d) {
  auto r = detail::start("thm_4_2", d, "h(G) <= 2 l(A)");
  Checklist c(r);
  detail::check_g_solvable(c, d);
  detail::check_a_nilpotent(c, d);
  detail::check_fpf(c, d);
  detail::check_good(c, d);
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  record_heights(r, d);
  c.conclude(d.h_g() <= 2 * ell(d.action().a()));
  return r;
}

inline TheoremReport verify_thm_4_4(InstanceData& d) {
  auto r = detail::start("thm_4_4", d, "h(G) <= l(A)");
  Checklist c(r);
  detail::check_g_solvable(c, d);
  c.check("A solvable", [&] { return detail::verdict_of(d.a_solvable()); });
  c.check("A abelian", [&] { return detail::verdict_of(d.action().a()->is_abelian()); });
  c.check("exp(A) squarefree", [&] {
    const std::size_t e = exponent(d.action().a());
    for (const auto& [p, k] : factorize(e))
      if (k > 1) return detail::verdict_of(false, "exp(A) = " + std::to_string(e));
    return detail::verdict_of(true, "exp(A) = " + std::to_string(e));
  });
  c.check("Sylow 2-subgroups of G abelian", [&] {
    const auto s = sylow_subgroup(d.action().g(), 2);
    return detail::verdict_of(as_group(s).group->is_abelian(), "Sylow 2-subgroup " + detail::order_text(s));
  });
  detail::check_fpf(c, d);
  detail::check_good(c, d);
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  record_heights(r, d);
  const bool holds = d.h_g() <= ell(d.action().a());
  // the weaker bound of thm_4_2 must follow
  r.witnesses["implies_2l_bound"] = d.h_g() <= 2 * ell(d.action().a());
  c.conclude(holds);
  return r;
}

/// The intersection of the A-images of [G,B].
inline Subgroup intersect_a_images(const Action& act, const Subgroup& gb) {
  Mask m = gb.mask();
  for (Elem a = 0; a < act.a()->order(); ++a) {
    Mask img = act.g()->empty_mask();
    for (auto x = gb.mask().find_first(); x != Mask::npos; x = gb.mask().find_next(x))
      img.set(act.act(a, static_cast<Elem>(x)));
    m &= img;
  }
  return subgroup_from_mask(act.g(), m);
}

inline TheoremReport verify_thm_4_5(InstanceData& d) {
  auto r = detail::start("thm_4_5", d, "h(G) <= l(A:B)");
  Checklist c(r);
  const Action& act = d.action();
  detail::check_a_nilpotent(c, d);
  c.check("|A| odd", [&] { return detail::verdict_of(act.a()->order() % 2 == 1); });
  c.check("A is C_q wr C_q-free for every prime q", [&] { return detail::verdict_of(is_cqwrcq_free(act.a(), d.bounds)); });
  detail::check_fpf(c, d);
  detail::check_good(c, d);
  c.check("every subgroup of A acts with regular orbits", [&] {
    for (const auto& b : act.a_subgroups(d.bounds)) {
      const auto ro = regular_orbits_check(act, b, d.bounds);
      if (!ro.ok)
        return detail::verdict_of(false, "|B| = " + std::to_string(b.size()) + " fails on a section of order " +
                                             std::to_string(ro.witness_h->size() / ro.witness_k->size()));
    }
    return detail::verdict_of(true);
  });
  Subgroup meet;
  c.check("intersection of the A-images of [G,B] is trivial", [&] {
    const Subgroup gb = commutator(act, d.b);
    meet = intersect_a_images(act, gb);
    // the intersection must be A-invariant and normal in G
    require(act.is_invariant(meet) && is_normal(meet), ErrorKind::InternalError,
            "intersection of A-images of [G,B] is not A-invariant and normal");
    return detail::verdict_of(meet.is_trivial(), "|B| = " + std::to_string(d.b.size()) + ", |[G,B]| = " +
                                                     std::to_string(gb.size()) + ", intersection " +
                                                     detail::order_text(meet));
  });
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  r.witnesses["b"] = subgroup_json(d.b);
  r.witnesses["ell_A_B"] = ell_index(d.b);
  r.witnesses["g_solvable"] = d.g_solvable();
  if (!d.g_solvable()) {
    c.conclude(false, "G is not solvable");
    return r;
  }
  record_heights(r, d);
  c.conclude(d.h_g() <= ell_index(d.b));
  return r;
}

// ---------------------------------------------------------------------------
// Complex modules

inline void check_rep_present(Checklist& c, InstanceData& d) {
  c.check("instance provides a complex GA-module V", [&] { return detail::verdict_of(d.rep.has_value()); });
}

inline TheoremReport verify_thm_3_1(InstanceData& d) {
  auto r = detail::start("thm_3_1", d,
                         "some homogeneous component U of V_N and B <= A have B <= N_A(U), C_V(B) = 0, "
                         "[G,B] <= N_G(U); and [G,B] <= N when V_N is not homogeneous");
  Checklist c(r);
  const Action& act = d.action();
  check_rep_present(c, d);
  detail::check_a_nilpotent(c, d);
  c.check("A acts with regular orbits on G", [&] {
    const auto ro = regular_orbits_check(act, whole_group(act.a()), d.bounds);
    return detail::verdict_of(ro.ok, std::to_string(ro.sections_checked) + " irreducible sections");
  });
  c.check("V_G homogeneous", [&] {
    const auto dec = homogeneous_components(*d.rep, act.g_in_ga(), d.bounds);
    return detail::verdict_of(dec.is_homogeneous(), std::to_string(dec.components.size()) + " components");
  });
  c.check("C_V(A) = 0", [&] {
    const auto k = fixed_space_dim(*d.rep, act.a_in_ga());
    return detail::verdict_of(k == 0, "dim C_V(A) = " + std::to_string(k));
  });
  // candidate N: given, or every qualifying one
  struct Candidate {
    Subgroup n;
    std::size_t r = 0;
    detail::HallSearch hall;
  };
  std::vector<Candidate> cands;
  std::vector<Subgroup> bottoms;
  c.check("G/N is a GA-chief factor", [&] {
    const auto all = detail::chief_factor_bottoms(act, d.bounds);
    if (d.normal) {
      const bool ok = std::any_of(all.begin(), all.end(), [&](const Subgroup& n) { return n == *d.normal; });
      if (ok) bottoms.push_back(*d.normal);
      return detail::verdict_of(ok, "given N of " + detail::order_text(*d.normal));
    }
    bottoms = all;
    return detail::verdict_of(!bottoms.empty(), std::to_string(bottoms.size()) + " candidates");
  });
  c.check("G/N elementary abelian r-group", [&] {
    for (const auto& n : bottoms)
      if (auto p = detail::elementary_abelian_prime(act.g_in_ga(), n)) {
        cands.push_back({n, *p, {}});
      }
    return detail::verdict_of(!cands.empty(), std::to_string(cands.size()) + " of " + std::to_string(bottoms.size()) +
                                                  " candidates");
  });
  c.check("A normalizes a Hall r'-subgroup of GA", [&] {
    if (!is_solvable(act.ga())) return detail::verdict_of(false, "GA is not solvable; Hall search unsupported");
    std::vector<Candidate> keep;
    std::size_t searched = 0;
    for (auto& cand : cands) {
      cand.hall = detail::a_normalized_hall(act, cand.r);
      searched += cand.hall.searched;
      if (cand.hall.found) keep.push_back(cand);
    }
    cands = std::move(keep);
    return detail::verdict_of(!cands.empty(), "exhaustive search over " + std::to_string(searched) +
                                                  " Hall subgroups; " + std::to_string(cands.size()) +
                                                  " qualifying N");
  });
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  const ComplexRep& v = *d.rep;
  const auto& a_lattice = act.a_subgroups(d.bounds);
  std::vector<std::size_t> cvb(a_lattice.size());
  for (std::size_t i = 0; i < a_lattice.size(); ++i) cvb[i] = fixed_space_dim(v, act.to_ga_from_a(a_lattice[i]));
  bool all_ok = true;
  std::string why;
  Json per = Json::array();
  for (const auto& cand : cands) {
    const auto dec = homogeneous_components(v, cand.n, d.bounds);
    const auto perm = detail::component_permutations(v, dec);
    Json e;
    e["n_order"] = cand.n.size();
    e["r"] = cand.r;
    e["components"] = dec.components.size();
    std::optional<std::pair<std::size_t, std::size_t>> found, found_final;
    std::size_t triples = 0;
    for (std::size_t u = 0; u < dec.components.size(); ++u) {
      const Subgroup stab_g = detail::component_stabilizer_in(perm, u, act.g_in_ga());
      for (std::size_t bi = 0; bi < a_lattice.size(); ++bi) {
        const Subgroup& b = a_lattice[bi];
        if (cvb[bi] != 0) continue;
        bool fixes = true;
        for (Elem s : b.generators())
          if (perm[act.iota_a(s)][u] != u) fixes = false;
        if (!fixes) continue;
        const Subgroup gb = act.to_ga_from_g(commutator(act, b));
        if (!gb.is_subset_of(stab_g)) continue;
        ++triples;
        if (!found) found = std::make_pair(u, bi);
        if (!found_final && (dec.is_homogeneous() || gb.is_subset_of(cand.n))) found_final = std::make_pair(u, bi);
      }
    }
    e["triples"] = triples;
    if (found_final) {
      e["u"] = found_final->first;
      e["u_dim"] = dec.components[found_final->first].dim();
      e["b"] = subgroup_json(a_lattice[found_final->second]);
    }
    e["found"] = found.has_value();
    e["final_clause"] = found_final.has_value();
    if (!found_final) {
      all_ok = false;
      why = found ? "no triple with [G,B] <= N for N of order " + std::to_string(cand.n.size())
                  : "no (U, B) for N of order " + std::to_string(cand.n.size());
    }
    per.push_back(std::move(e));
  }
  r.witnesses["per_n"] = std::move(per);
  c.conclude(all_ok, why);
  return r;
}

inline TheoremReport verify_thm_3_3(InstanceData& d) {
  auto r = detail::start("thm_3_3", d,
                         "every homogeneous component W of V_N is A-invariant, [G,A] <= N_G(W) and "
                         "G = N_G(W) C_G(A)");
  Checklist c(r);
  const Action& act = d.action();
  check_rep_present(c, d);
  detail::check_g_solvable(c, d);
  detail::check_a_nilpotent(c, d);
  c.check("A acts with regular orbits on G", [&] {
    const auto ro = regular_orbits_check(act, whole_group(act.a()), d.bounds);
    return detail::verdict_of(ro.ok, std::to_string(ro.sections_checked) + " irreducible sections");
  });
  detail::check_good(c, d);
  c.check("V_G homogeneous", [&] {
    const auto dec = homogeneous_components(*d.rep, act.g_in_ga(), d.bounds);
    return detail::verdict_of(dec.is_homogeneous(), std::to_string(dec.components.size()) + " components");
  });
  c.check("C_V(A) = 0", [&] {
    const auto k = fixed_space_dim(*d.rep, act.a_in_ga());
    return detail::verdict_of(k == 0, "dim C_V(A) = " + std::to_string(k));
  });
  c.check("C_V(A0) != 0 for every proper A0 < A", [&] {
    for (const auto& b : act.a_subgroups(d.bounds)) {
      if (b.is_whole()) continue;
      if (fixed_space_dim(*d.rep, act.to_ga_from_a(b)) == 0)
        return detail::verdict_of(false, "C_V(A0) = 0 for |A0| = " + std::to_string(b.size()));
    }
    return detail::verdict_of(true);
  });
  std::vector<Subgroup> ns;
  c.check("[Z(N),A] acts nontrivially on V", [&] {
    const Subgroup ker = rep_kernel(*d.rep);
    const Subgroup a = act.a_in_ga();
    std::vector<Subgroup> pool;
    if (d.normal)
      pool.push_back(*d.normal);
    else
      pool = normal_subgroups(act.ga(), d.bounds);
    for (const auto& n : pool) {
      const Subgroup z = centralizer(n, n);
      if (!commutator_subgroup(z, a).is_subset_of(ker)) ns.push_back(n);
    }
    return detail::verdict_of(!ns.empty(), std::to_string(ns.size()) + " of " + std::to_string(pool.size()) +
                                               " normal subgroups N qualify");
  });
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  const ComplexRep& v = *d.rep;
  const Subgroup g = act.g_in_ga();
  const Subgroup cga = act.to_ga_from_g(d.cga());
  const Subgroup ga_comm = act.to_ga_from_g(commutator(act, whole_group(act.a())));
  bool all_ok = true;
  std::string why;
  Json per = Json::array();
  for (const auto& n : ns) {
    const auto dec = homogeneous_components(v, n, d.bounds);
    const auto perm = detail::component_permutations(v, dec);
    Json e;
    e["n_order"] = n.size();
    e["components"] = dec.components.size();
    std::size_t bad = 0;
    for (std::size_t w = 0; w < dec.components.size(); ++w) {
      bool a_fixed = true;
      for (Elem s : act.a()->generators())
        if (perm[act.iota_a(s)][w] != w) a_fixed = false;
      const Subgroup stab = detail::component_stabilizer_in(perm, w, g);
      const bool comm_ok = ga_comm.is_subset_of(stab);
      const bool product_ok = set_product(stab, cga).count() == g.size();
      if (!(a_fixed && comm_ok && product_ok)) {
        ++bad;
        if (all_ok)
          why = "component " + std::to_string(w) + " of V_N, |N| = " + std::to_string(n.size()) +
                (a_fixed ? "" : ": not A-invariant") + (comm_ok ? "" : ": [G,A] not in N_G(W)") +
                (product_ok ? "" : ": N_G(W)C_G(A) != G");
        all_ok = false;
      }
    }
    e["failing_components"] = bad;
    per.push_back(std::move(e));
  }
  r.witnesses["per_n"] = std::move(per);
  c.conclude(all_ok, why);
  return r;
}

// ---------------------------------------------------------------------------
// Affine example

inline TheoremReport verify_example_1(InstanceData& d) {
  auto r = detail::start("example_1", d,
                         "a faithful irreducible H-module V over GF(p) exists, and inner conjugation by an element x "
                         "of order 3 on G = V:H satisfies gcd(|[G,A]|, |GA:[G,A]|) = 1");
  require(d.is_affine(), ErrorKind::InvalidArgument, "example_1 needs an affine instance");
  Checklist c(r);
  const GroupPtr& h = d.affine_h;
  const unsigned p = d.spec.affine->p;
  c.check("O_p(H) = 1", [&] { return detail::verdict_of(p_core(h, p).is_trivial()); });
  c.check("H has a unique minimal normal subgroup", [&] {
    const auto normals = normal_subgroups(h, d.bounds);
    std::size_t minimal = 0;
    for (const auto& n : normals) {
      if (n.is_trivial()) continue;
      bool is_min = true;
      for (const auto& o : normals)
        if (!o.is_trivial() && o.size() < n.size() && o.is_subset_of(n)) is_min = false;
      if (is_min) ++minimal;
    }
    return detail::verdict_of(minimal == 1, std::to_string(minimal) + " minimal normal subgroups");
  });
  Elem x = 0;
  c.check("x has order 3 in H", [&] {
    if (d.spec.affine->x) {
      x = *d.spec.affine->x;
    } else {
      for (Elem y = 0; y < h->order(); ++y)
        if (h->element_order(y) == 3) {
          x = y;
          break;
        }
    }
    return detail::verdict_of(h->element_order(x) == 3, "x = " + std::to_string(x));
  });
  if (!c.ok()) {
    c.conclude(false);
    return r;
  }
  const std::uint64_t s1 = d.seed, s2 = mix_seed(d.seed);
  r.seeds["module_search"] = s1;
  r.seeds["irreducibility_recheck"] = s2;
  r.seeds["commutator_sampling"] = s2 + 1;
  const auto search = faithful_irreducible_module(h, p, d.bounds, s1);
  const bool faithful = search.module->kernel().is_trivial();
  const auto irr = is_irreducible(search.module, s2);
  const AffineGroup g = affine_group(search.module);
  const auto comm = affine_commutator_with(g, g.point(x));
  // every sampled [g, x] lies in the computed subgroup
  std::mt19937_64 rng(s2 + 1);
  std::size_t outside = 0;
  for (int i = 0; i < 64; ++i)
    if (!comm.contains(g.comm(g.random_element(rng), g.point(x)))) ++outside;
  r.witnesses["module_dimension"] = search.dimension;
  r.witnesses["coset_subgroup_order"] = search.coset_subgroup_order;
  r.witnesses["faithful"] = faithful;
  r.witnesses["irreducible"] = irr.irreducible;
  r.witnesses["irreducibility_method"] = irr.method;
  r.witnesses["G_order"] = g.order().str();
  r.witnesses["A_order"] = comm.automorphism_order;
  r.witnesses["commutator_order"] = comm.order.str();
  r.witnesses["quotient_order"] = comm.quotient_order.str();
  r.witnesses["gcd"] = comm.gcd.str();
  r.witnesses["sampled_commutators_outside"] = outside;
  c.conclude(faithful && irr.irreducible && comm.gcd == 1 && outside == 0);
  return r;
}

// ---------------------------------------------------------------------------
// Golden run on the order-189 group

inline TheoremReport verify_example_3_2(const Bounds& bounds = {}) {
  TheoremReport r;
  r.theorem = "example_3_2";
  r.instance = "ex32_GA";
  r.conclusion = "all golden clauses of the order-189 reconstruction hold exactly";
  Checklist c(r);
  const auto ex = example_3_2_ga();
  const Group& GA = *ex.ga;
  Json clauses = Json::array();
  bool all = true;
  auto clause = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    Json e;
    e["clause"] = name;
    e["pass"] = ok;
    if (!detail.empty()) e["detail"] = detail;
    clauses.push_back(std::move(e));
    all = all && ok;
  };
  const Elem sigma3 = GA.pow(ex.sigma, 3);
  clause("|S| = 27 and Z(S) = <sigma^3>", ex.s.size() == 27 && centralizer(ex.s, ex.s) == ex.z,
         "|Z(S)| = " + std::to_string(centralizer(ex.s, ex.s).size()));
  // F = G / Z(S) is the Frobenius group of order 21
  {
    auto g = as_group(ex.g);
    Mask zm = g.group->empty_mask();
    for (Elem z : ex.z.elements()) zm.set(g.from_parent[z]);
    auto f = quotient(subgroup_from_mask(g.group, zm));
    const bool frob = f.group->order() == 21 && is_isomorphic(f.group, frobenius21(), bounds).has_value();
    clause("G/Z(S) is Frobenius of order 21", frob);
  }
  // lambda on R x <sigma^3> x <alpha>; mu(alpha) searched for C_V(A) = 0
  const auto rk = closure(ex.ga, {ex.r, sigma3, ex.alpha});
  std::optional<ComplexRep> v;
  std::size_t j_used = 0;
  Json tried = Json::array();
  for (unsigned j = 0; j < 3 && !v; ++j) {
    auto lambda = make_linear_character(rk, 21, {ex.r, sigma3, ex.alpha}, {3, 0, 7 * j});
    auto cand = induce_from_linear(ex.ga, lambda, bounds);
    const std::size_t fix = fixed_space_dim(cand, ex.a);
    Json t;
    t["mu_alpha_exponent"] = j;
    t["dim_CVA"] = fix;
    tried.push_back(std::move(t));
    if (fix == 0) {
      v = std::move(cand);
      j_used = j;
    }
  }
  r.witnesses["mu_alpha_search"] = std::move(tried);
  if (!v) {
    clause("some mu(alpha) gives C_V(A) = 0", false);
    r.witnesses["clauses"] = std::move(clauses);
    c.conclude(false, "no choice of mu(alpha) gives C_V(A) = 0");
    return r;
  }
  r.witnesses["mu_alpha_exponent"] = j_used;
  const Character chi = character_of(*v);
  const Character chi_g = restrict(chi, ex.g);
  const auto chi1 = chi.degree().rational_value();
  clause("chi(1) = 3", chi1 == 3, "chi(1) = " + chi1.str());
  clause("V irreducible for GA", inner_product(chi, chi) == 1);
  clause("chi_G irreducible", inner_product(chi_g, chi_g) == 1);
  {
    Mask km = GA.empty_mask();
    for (auto x = ex.g.mask().find_first(); x != Mask::npos; x = ex.g.mask().find_next(x))
      if (chi_g(static_cast<Elem>(x)) == chi.degree()) km.set(x);
    clause("ker chi_G = Z(S), so chi is faithful on G/Z(S)", km == ex.z.mask());
  }
  const auto dec = homogeneous_components(*v, ex.n, bounds);
  const auto perm = detail::component_permutations(*v, dec);
  bool linear = true, alpha_fixed = true;
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    linear = linear && dec.components[i].dim() == 1 && dec.components[i].theta.degree() == Cyclotomic::one();
    alpha_fixed = alpha_fixed && perm[ex.alpha][i] == i;
  }
  clause("chi_N has 3 distinct linear constituents", dec.components.size() == 3 && linear,
         std::to_string(dec.components.size()) + " components");
  clause("each constituent is alpha-fixed", alpha_fixed);
  const Subgroup stab = detail::component_stabilizer_in(perm, 0, ex.g);
  const Subgroup cga = centralizer(ex.g, ex.a);
  clause("N_G(W1) = N = C_G(A), of order 21", stab == ex.n && cga == ex.n && stab.size() == 21,
         "|N_G(W1)| = " + std::to_string(stab.size()) + ", |C_G(A)| = " + std::to_string(cga.size()));
  const std::size_t prod = set_product(stab, cga).count();
  clause("G != N_G(W1) C_G(A)", prod != ex.g.size(), "|N_G(W1) C_G(A)| = " + std::to_string(prod));
  const std::size_t fix = fixed_space_dim(*v, ex.a);
  clause("C_V(A) = 0", fix == 0, "dim C_V(A) = " + std::to_string(fix));
  r.witnesses["clauses"] = std::move(clauses);
  c.conclude(all);
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch

/// Theorems run on an instance when the manifest does not restrict them.
inline std::vector<std::string> default_theorems(const InstanceData& d) {
  if (d.is_affine()) return {"example_1"};
  std::vector<std::string> out;
  for (const auto& t : theorem_ids())
    if (t != "example_1") out.push_back(t);
  return out;
}

inline TheoremReport run_theorem(const std::string& id, InstanceData& d) {
  const auto t0 = std::chrono::steady_clock::now();
  TheoremReport r;
  try {
    if (id == "goodness") r = verify_goodness(d);
    else if (id == "prop23") r = verify_prop23(d);
    else if (id == "invariant_hall") r = verify_invariant_hall(d);
    else if (id == "tower") r = verify_tower_height(d);
    else if (id == "thm_2_9") r = verify_thm_2_9(d);
    else if (id == "thm_2_10") r = verify_thm_2_10(d);
    else if (id == "cor_2_11") r = verify_cor_2_11(d);
    else if (id == "thm_3_1") r = verify_thm_3_1(d);
    else if (id == "thm_3_3") r = verify_thm_3_3(d);
    else if (id == "thm_4_2") r = verify_thm_4_2(d);
    else if (id == "thm_4_4") r = verify_thm_4_4(d);
    else if (id == "thm_4_5") r = verify_thm_4_5(d);
    else if (id == "example_1") r = verify_example_1(d);
    else fail(ErrorKind::InvalidArgument, "unknown theorem id " + id);
  } catch (const Error& e) {
    r = TheoremReport{};
    r.theorem = id;
    r.instance = d.spec.id;
    r.verdict = Verdict::Error;
    r.error_kind = to_string(e.kind());
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace goodaction
