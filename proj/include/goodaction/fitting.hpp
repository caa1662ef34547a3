#pragma once

// Fitting subgroup and series, pi-cores, prime lengths, and A-towers:
// validation of the tower conditions and searches for maximal towers.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "goodaction/action.hpp"
#include "goodaction/config.hpp"
#include "goodaction/gf_linear.hpp"
#include "goodaction/group_core.hpp"
#include "goodaction/primes.hpp"

namespace goodaction {

/// Largest normal subgroup whose order involves only primes in sigma.
inline Subgroup sigma_core(const GroupPtr& g, const PrimeSet& sigma, const Bounds& bounds = {}) {
  Subgroup best = trivial_subgroup(g);
  for (const auto& n : normal_subgroups(g, bounds))
    if (sigma.covers(n.size()) && n.size() > best.size()) best = n;
  return best;
}

inline Subgroup pprime_core(const GroupPtr& g, std::size_t p, const Bounds& bounds = {}) {
  PrimeSet sigma;
  for (std::size_t q : prime_divisors(g->order()))
    if (q != p) sigma.insert(q);
  return sigma_core(g, sigma, bounds);
}

/// F(G): product of the O_p(G).
inline Subgroup fitting_subgroup(const GroupPtr& g) {
  Subgroup f = trivial_subgroup(g);
  for (std::size_t p : prime_divisors(g->order())) f = join(f, p_core(g, p));
  return f;
}

struct FittingData {
  std::vector<Subgroup> series;  // 1 = F_0 < F_1 < ... < F_h = G
  std::size_t height = 0;
};

inline FittingData fitting_series(const GroupPtr& g) {
  require(is_solvable(g), ErrorKind::NonSolvableUnsupported, "Fitting height needs a solvable group");
  FittingData out;
  Subgroup cur = trivial_subgroup(g);
  out.series.push_back(cur);
  while (!cur.is_whole()) {
    auto q = quotient(cur);
    cur = preimage(q.projection, fitting_subgroup(q.group));
    out.series.push_back(cur);
  }
  out.height = out.series.size() - 1;
  return out;
}

inline std::size_t fitting_height(const GroupPtr& g) { return fitting_series(g).height; }

/// Number of prime factors of |A| with multiplicity.
inline std::size_t ell(const GroupPtr& a) { return big_omega(a->order()); }
inline std::size_t ell_index(const Subgroup& b) {
  return big_omega(b.group().order() / b.size());
}

// ---------------------------------------------------------------------------
// Towers

struct TowerData {
  std::vector<Subgroup> s;       // S_1 .. S_h
  std::vector<Subgroup> t;       // T_i = C_{S_i}(P_{i+1}), T_h = 1; P_i = S_i / T_i
  std::vector<std::size_t> primes;
  std::vector<std::optional<Subgroup>> h_witness;  // H_i, i >= 2
  std::string method;            // "fitting-series" or "exhaustive"
  std::size_t height() const noexcept { return s.size(); }
};

namespace detail {

/// Elements of S acting trivially by conjugation on U / T (S normalizes U and T).
inline Subgroup centralizer_of_section(const Subgroup& s, const Subgroup& u, const Subgroup& t) {
  const Group& G = s.group();
  Mask m = s.mask();
  const auto ue = u.elements();
  for (auto x = s.mask().find_first(); x != Mask::npos; x = s.mask().find_next(x)) {
    for (Elem y : ue) {
      // y^-1 (x^-1 y x) in T
      if (!t.contains(G.mul(G.inv(y), G.conj(y, static_cast<Elem>(x))))) {
        m.reset(x);
        break;
      }
    }
  }
  return subgroup_from_mask(s.parent(), m);
}

}  // namespace detail

/// Fills in T_i from the top of the tower down, per the centralizer chain.
inline void compute_tower_quotients(TowerData& t) {
  const std::size_t h = t.s.size();
  t.t.assign(h, Subgroup());
  t.primes.assign(h, 0);
  for (std::size_t i = h; i-- > 0;) {
    const auto f = factorize(t.s[i].size());
    t.primes[i] = f.size() == 1 ? f.begin()->first : 0;
    t.t[i] = i + 1 == h ? trivial_subgroup(t.s[i].parent())
                        : detail::centralizer_of_section(t.s[i], t.s[i + 1], t.t[i + 1]);
  }
  t.h_witness.resize(h);
}

struct TowerReport {
  bool a_invariant = true;
  bool prime_power = true;
  bool normalizing = true;
  bool nontrivial = true;
  bool primes_alternate = true;
  bool ok() const { return a_invariant && prime_power && normalizing && nontrivial && primes_alternate; }
  std::string failure() const {
    if (!a_invariant) return "terms not A-invariant";
    if (!prime_power) return "a term is not a p-group";
    if (!normalizing) return "S_i does not normalize S_j";
    if (!nontrivial) return "some P_i is trivial";
    if (!primes_alternate) return "adjacent primes coincide";
    return {};
  }
};

inline TowerReport verify_tower(const Action& act, TowerData t) {
  TowerReport r;
  const std::size_t h = t.s.size();
  for (const auto& s : t.s) {
    if (!act.is_invariant(s)) r.a_invariant = false;
    if (!is_prime_power(s.size())) r.prime_power = false;
  }
  if (!r.prime_power) return r;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j)
      for (Elem x : t.s[i].generators())
        if (!normalizes(t.s[j], x)) r.normalizing = false;
  if (!r.normalizing) return r;
  compute_tower_quotients(t);
  for (std::size_t i = 0; i < h; ++i)
    if (t.t[i].size() == t.s[i].size()) r.nontrivial = false;
  for (std::size_t i = 0; i + 1 < h; ++i)
    if (t.primes[i] == t.primes[i + 1]) r.primes_alternate = false;
  return r;
}

struct IrreducibleTowerReport {
  bool frattini = true;
  bool first_elementary = true;
  bool witnesses = true;
  bool irreducible = true;
  std::vector<std::optional<Subgroup>> h_witness;
  bool ok() const { return frattini && first_elementary && witnesses && irreducible; }
};

namespace detail {

struct Section {
  EmbeddedGroup emb;  // S_i as a group
  Quotient q;         // P_i = S_i / T_i
};

inline Section section(const Subgroup& s, const Subgroup& t) {
  auto emb = as_group(s);
  auto q = quotient(emb.restrict(t));
  return Section{std::move(emb), std::move(q)};
}

// Preimage in the ambient group of a subgroup of P_i.
inline Subgroup lift_section(const Section& sec, const Subgroup& local) {
  return sec.emb.lift(preimage(sec.q.projection, local));
}

}  // namespace detail

/// The Frattini, elementary, witness and irreducibility conditions for a
/// tower that already passes verify_tower.
inline IrreducibleTowerReport verify_irreducible_tower(const Action& act, TowerData t, std::uint64_t seed = 1,
                                                       const Bounds& bounds = {}) {
  require(verify_tower(act, t).ok(), ErrorKind::PreconditionFailed, "tower fails its basic conditions");
  compute_tower_quotients(t);
  IrreducibleTowerReport r;
  const std::size_t h = t.s.size();
  r.h_witness.assign(h, std::nullopt);
  const GroupPtr& gp = act.g();
  const Group& G = *gp;
  std::vector<detail::Section> secs;
  std::vector<Subgroup> phi_lift;  // preimage of Phi(P_i) in S_i
  for (std::size_t i = 0; i < h; ++i) {
    secs.push_back(detail::section(t.s[i], t.t[i]));
    const auto& p = secs.back().q.group;
    const Subgroup phi = frattini_subgroup(p, bounds);
    phi_lift.push_back(detail::lift_section(secs.back(), phi));
    auto phi_g = as_group(phi);
    if (!frattini_subgroup(phi_g.group, bounds).is_trivial()) r.frattini = false;
    if (!phi.is_subset_of(center(p))) r.frattini = false;
    if (t.primes[i] != 2 && exponent(p) != t.primes[i] && p->order() > 1) r.frattini = false;
    if (i > 0) {
      // representatives in S_{i-1} fix Phi(P_i) pointwise modulo T_i
      for (Elem x : t.s[i - 1].generators())
        for (Elem y : phi_lift[i].elements())
          if (!t.t[i].contains(G.mul(G.inv(y), G.conj(y, x)))) r.frattini = false;
    }
  }
  if (h > 0 && !is_elementary_abelian(secs[0].q.group)) r.first_elementary = false;
  // H_i elementary abelian A-invariant in P_{i-1} with [H_i, P_i] = P_i
  for (std::size_t i = 1; i < h; ++i) {
    bool found = false;
    for (const auto& x : act.g_subgroups(bounds)) {
      if (!t.t[i - 1].is_subset_of(x) || !x.is_subset_of(t.s[i - 1]) || !act.is_invariant(x)) continue;
      if (x.size() == t.t[i - 1].size()) continue;
      // X / T_{i-1} elementary abelian
      auto xs = detail::section(x, t.t[i - 1]);
      if (!is_elementary_abelian(xs.q.group)) continue;
      std::vector<Elem> seeds(t.t[i].generators());
      for (Elem a : x.generators())
        for (Elem y : t.s[i].elements()) seeds.push_back(G.comm(y, a));
      if (closure(gp, seeds).size() == t.s[i].size()) {
        found = true;
        r.h_witness[i] = x;
        break;
      }
    }
    if (!found) r.witnesses = false;
  }
  // (S_1 ... S_{i-1}) A irreducible on P_i / Phi(P_i)
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t p = t.primes[i];
    // basis of S_i / Phi~ as a GF(p) space
    const Subgroup& si = t.s[i];
    const Subgroup& fi = phi_lift[i];
    std::vector<Elem> basis;
    Subgroup span = fi;
    for (Elem y : si.elements()) {
      if (span.contains(y)) continue;
      basis.push_back(y);
      span = closure(span, std::vector<Elem>{y});
    }
    const std::size_t d = basis.size();
    if (d <= 1) continue;
    // coordinates: element -> vector, by enumerating combinations
    std::map<Elem, GFVector> coords;
    {
      std::vector<unsigned> c(d, 0);
      for (;;) {
        Elem e = kIdentity;
        GFVector v(static_cast<unsigned>(p), d);
        for (std::size_t j = 0; j < d; ++j) {
          e = G.mul(e, G.pow(basis[j], c[j]));
          v.set(j, c[j]);
        }
        for (Elem f : fi.elements()) coords.emplace(G.mul(e, f), v);
        std::size_t j = 0;
        while (j < d && ++c[j] == p) c[j++] = 0;
        if (j == d) break;
      }
    }
    // acting group inside GA
    std::vector<Elem> gens;
    for (std::size_t j = 0; j < i; ++j)
      for (Elem x : t.s[j].generators()) gens.push_back(act.iota_g(x));
    for (Elem a : act.a()->generators()) gens.push_back(act.iota_a(a));
    const Group& GA = *act.ga();
    auto emb = as_group(closure(act.ga(), gens));
    std::vector<Elem> mgens = emb.group->generators();
    if (mgens.empty()) {
      r.irreducible = false;  // trivial group on a space of dimension >= 2
      continue;
    }
    std::vector<GFMatrix> mats;
    for (Elem s : mgens) {
      const Elem x = emb.to_parent[s];
      GFMatrix m(static_cast<unsigned>(p), d, d);
      for (std::size_t j = 0; j < d; ++j) m.row(j) = coords.at(GA.conj(basis[j], x));
      mats.push_back(std::move(m));
    }
    auto mod = GModule::make(emb.group, static_cast<unsigned>(p), d, mgens, std::move(mats));
    if (!is_irreducible(mod, seed).irreducible) r.irreducible = false;
  }
  return r;
}

namespace detail {

// A-invariant Sylow q-subgroups of an A-invariant subgroup X.
inline std::vector<Subgroup> invariant_sylows(const Action& act, const Subgroup& x, std::size_t q) {
  std::vector<Subgroup> out;
  if (x.size() % q != 0) return out;
  auto emb = as_group(x);
  for (const auto& c : conjugates(sylow_subgroup(emb.group, q))) {
    Subgroup lifted = emb.lift(c);
    if (act.is_invariant(lifted)) out.push_back(lifted);
  }
  return out;
}

inline Subgroup intersect_normalizers(const Subgroup& base, const std::vector<Subgroup>& terms) {
  Subgroup cur = base;
  for (const auto& s : terms) cur = intersection(cur, normalizer(s));
  return cur;
}

// Builds S_h, S_{h-1}, ... inside F_1, F_2, ... of the Fitting series.
inline bool constructive_tower(const Action& act, const FittingData& fd, std::vector<Subgroup>& top_down,
                               std::vector<Subgroup>& tq) {
  const std::size_t k = top_down.size();
  if (k == fd.height) return true;
  const Subgroup x = intersect_normalizers(fd.series[k + 1], top_down);
  for (std::size_t q : prime_divisors(x.size())) {
    if (k > 0 && q == static_cast<std::size_t>(factorize(top_down.back().size()).begin()->first)) continue;
    for (const auto& s : invariant_sylows(act, x, q)) {
      Subgroup t = k == 0 ? trivial_subgroup(act.g()) : centralizer_of_section(s, top_down.back(), tq.back());
      if (t.size() == s.size()) continue;
      top_down.push_back(s);
      tq.push_back(t);
      if (constructive_tower(act, fd, top_down, tq)) return true;
      top_down.pop_back();
      tq.pop_back();
    }
  }
  return false;
}

struct TowerSearch {
  const Action& act;
  std::vector<Subgroup> candidates;  // A-invariant nontrivial p-subgroups
  std::vector<std::size_t> primes;
  std::vector<Mask> normalizer_masks;
  std::map<std::tuple<Mask, std::size_t, Mask>, std::pair<std::size_t, std::ptrdiff_t>> memo;

  explicit TowerSearch(const Action& a, const Bounds& bounds) : act(a) {
    for (const auto& s : act.g_subgroups(bounds))
      if (!s.is_trivial() && is_prime_power(s.size()) && act.is_invariant(s)) {
        candidates.push_back(s);
        primes.push_back(factorize(s.size()).begin()->first);
        normalizer_masks.push_back(normalizer(s).mask());
      }
  }

  // Longest extension below a term (S = candidates[top], T): returns
  // (extra height, index of the next term or -1).
  std::pair<std::size_t, std::ptrdiff_t> best_below(const Mask& allowed, std::size_t top, const Subgroup& t) {
    auto key = std::make_tuple(allowed, top, t.mask());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::pair<std::size_t, std::ptrdiff_t> best{0, -1};
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (primes[c] == primes[top] || !candidates[c].mask().is_subset_of(allowed)) continue;
      const Subgroup tc = centralizer_of_section(candidates[c], candidates[top], t);
      if (tc.size() == candidates[c].size()) continue;
      auto sub = best_below(allowed & normalizer_masks[c], c, tc);
      if (sub.first + 1 > best.first) best = {sub.first + 1, static_cast<std::ptrdiff_t>(c)};
    }
    memo.emplace(key, best);
    return best;
  }

  TowerData best_tower() {
    std::size_t best_h = 0;
    std::ptrdiff_t best_top = -1;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      auto sub = best_below(normalizer_masks[c], c, trivial_subgroup(act.g()));
      if (sub.first + 1 > best_h) {
        best_h = sub.first + 1;
        best_top = static_cast<std::ptrdiff_t>(c);
      }
    }
    TowerData out;
    out.method = "exhaustive";
    if (best_top < 0) return out;
    std::vector<Subgroup> top_down;
    Mask allowed = normalizer_masks[best_top];
    std::size_t cur = static_cast<std::size_t>(best_top);
    Subgroup t = trivial_subgroup(act.g());
    top_down.push_back(candidates[cur]);
    for (;;) {
      auto step = best_below(allowed, cur, t);
      if (step.second < 0) break;
      const auto next = static_cast<std::size_t>(step.second);
      t = centralizer_of_section(candidates[next], candidates[cur], t);
      allowed &= normalizer_masks[next];
      cur = next;
      top_down.push_back(candidates[cur]);
    }
    out.s.assign(top_down.rbegin(), top_down.rend());
    compute_tower_quotients(out);
    return out;
  }
};

}  // namespace detail

/// Height of the tallest A-tower, by exhaustive search over A-invariant
/// prime-power subgroups.
inline TowerData exhaustive_tower(const Action& act, const Bounds& bounds = {}) {
  require(act.g()->order() <= bounds.tower_exhaustive_order, ErrorKind::OrderBoundExceeded,
          "exhaustive tower search is limited by the tower bound");
  detail::TowerSearch search(act, bounds);
  return search.best_tower();
}

/// An A-tower of height h(G): built along the Fitting series from A-invariant
/// Sylow subgroups, with the exhaustive search as fallback.
inline TowerData find_tower(const Action& act, const Bounds& bounds = {}) {
  const FittingData fd = fitting_series(act.g());
  TowerData out;
  if (fd.height == 0) {
    out.method = "fitting-series";
    return out;
  }
  std::vector<Subgroup> top_down, tq;
  if (detail::constructive_tower(act, fd, top_down, tq)) {
    out.s.assign(top_down.rbegin(), top_down.rend());
    out.method = "fitting-series";
    compute_tower_quotients(out);
  } else if (act.g()->order() <= bounds.tower_exhaustive_order) {
    out = exhaustive_tower(act, bounds);
  }
  if (out.height() != fd.height)
    fail(ErrorKind::SearchExhausted, "no A-tower of height h(G) found");
  require(verify_tower(act, out).ok(), ErrorKind::InternalError, "constructed tower fails its own conditions");
  return out;
}

}  // namespace goodaction
