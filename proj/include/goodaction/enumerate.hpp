#pragma once

// Enumeration of automorphisms and of actions A -> Aut(G), used by the
// corpus generator and the exhaustive sweeps in the tests.

#include <numeric>
#include <string>
#include <vector>

#include "goodaction/action.hpp"
#include "goodaction/constructors.hpp"
#include "goodaction/group_core.hpp"

namespace goodaction {

struct Automorphism {
  std::vector<Elem> gen_images;  // images of G->generators()
  std::vector<Elem> table;
};

namespace detail {

inline void automorphism_search(const Group& g, std::vector<Elem>& imgs, std::size_t k, std::vector<Elem>& phi,
                                std::vector<Automorphism>& out, std::size_t limit) {
  const auto& gens = g.generators();
  if (out.size() >= limit) return;
  if (k == gens.size()) {
    if (!extend_map(g, g, gens, imgs, k, phi)) return;
    Mask seen(g.order());
    for (Elem e : phi) {
      if (seen.test(e)) return;
      seen.set(e);
    }
    out.push_back({imgs, phi});
    return;
  }
  for (Elem c = 0; c < g.order(); ++c) {
    if (g.element_order(c) != g.element_order(gens[k])) continue;
    if (g.classes()[g.class_of(c)].size() != g.classes()[g.class_of(gens[k])].size()) continue;
    imgs[k] = c;
    if (!extend_map(g, g, gens, imgs, k + 1, phi)) continue;
    automorphism_search(g, imgs, k + 1, phi, out, limit);
  }
}

}  // namespace detail

/// All automorphisms of G (at most `limit`), ordered lexicographically by
/// generator images; the identity comes first.
inline std::vector<Automorphism> automorphisms(const GroupPtr& g, std::size_t limit = 20000) {
  std::vector<Automorphism> out;
  std::vector<Elem> imgs(g->generators().size());
  std::vector<Elem> phi(g->order());
  detail::automorphism_search(*g, imgs, 0, phi, out, limit);
  return out;
}

inline std::size_t automorphism_order(const std::vector<Elem>& table) {
  std::vector<Elem> cur = table;
  for (std::size_t k = 1;; ++k) {
    bool id = true;
    for (Elem x = 0; x < cur.size(); ++x)
      if (cur[x] != x) {
        id = false;
        break;
      }
    if (id) return k;
    std::vector<Elem> next(cur.size());
    for (Elem x = 0; x < cur.size(); ++x) next[x] = table[cur[x]];
    cur = std::move(next);
  }
}

/// The `images(...)` spec naming one automorphism per acting generator.
inline std::string images_spec(const std::vector<const Automorphism*>& per_generator) {
  std::string s = "images(";
  for (std::size_t i = 0; i < per_generator.size(); ++i) {
    if (i) s += ";";
    const auto& gi = per_generator[i]->gen_images;
    for (std::size_t j = 0; j < gi.size(); ++j) s += (j ? "," : "") + std::to_string(gi[j]);
  }
  return s + ")";
}

struct ActionChoice {
  std::string spec;  // images(...) over G->generators() and A->generators()
  std::vector<std::vector<Elem>> tables;
};

/// Every homomorphism A -> Aut(G) (at most `limit`), as action specs.
inline std::vector<ActionChoice> all_actions(const GroupPtr& g, const GroupPtr& a, std::size_t limit = 100000) {
  const auto auts = automorphisms(g);
  std::vector<std::size_t> orders(auts.size());
  for (std::size_t i = 0; i < auts.size(); ++i) orders[i] = automorphism_order(auts[i].table);
  const auto& agens = a->generators();
  std::vector<std::vector<std::size_t>> allowed(agens.size());
  for (std::size_t j = 0; j < agens.size(); ++j)
    for (std::size_t i = 0; i < auts.size(); ++i)
      if (a->element_order(agens[j]) % orders[i] == 0) allowed[j].push_back(i);
  std::vector<ActionChoice> out;
  std::vector<std::size_t> pick(agens.size(), 0);
  if (agens.empty()) {
    out.push_back({"trivial", {}});
    return out;
  }
  for (const auto& v : allowed)
    if (v.empty()) return out;
  for (;;) {
    std::vector<std::vector<Elem>> tables;
    std::vector<const Automorphism*> chosen;
    for (std::size_t j = 0; j < agens.size(); ++j) {
      chosen.push_back(&auts[allowed[j][pick[j]]]);
      tables.push_back(chosen.back()->table);
    }
    try {
      extend_to_action(g, a, agens, tables);
      out.push_back({images_spec(chosen), std::move(tables)});
      if (out.size() >= limit) return out;
    } catch (const Error&) {
      // relations of A not respected
    }
    std::size_t j = agens.size();
    while (j-- > 0) {
      if (++pick[j] < allowed[j].size()) break;
      pick[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace goodaction
