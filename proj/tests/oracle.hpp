#pragma once

// Test-only reference implementations. They work on explicit permutations
// and floating-point complex numbers and share no code with the library.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using PermSet = std::set<Perm>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline PermSet generate(const std::vector<Perm>& gens, std::size_t n) {
  PermSet s{identity(n)};
  std::vector<Perm> frontier{identity(n)};
  while (!frontier.empty()) {
    Perm x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Perm y = compose(x, g);
      if (s.insert(y).second) frontier.push_back(y);
    }
  }
  return s;
}

inline PermSet generate_set(const PermSet& seeds, std::size_t n) { return generate(std::vector<Perm>(seeds.begin(), seeds.end()), n); }

inline std::size_t degree(const PermSet& g) { return g.begin()->size(); }

inline PermSet join(const PermSet& a, const PermSet& b) {
  PermSet u = a;
  u.insert(b.begin(), b.end());
  return generate_set(u, degree(a));
}

/// Every subgroup: closures of cyclic subgroups joined until nothing new appears.
inline std::vector<PermSet> subgroups(const PermSet& g) {
  std::set<PermSet> all;
  for (const auto& x : g) all.insert(generate(std::vector<Perm>{x}, degree(g)));
  std::vector<PermSet> cyclics(all.begin(), all.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PermSet> cur(all.begin(), all.end());
    for (const auto& h : cur)
      for (const auto& c : cyclics)
        if (all.insert(join(h, c)).second) grew = true;
  }
  return {all.begin(), all.end()};
}

inline bool is_normal(const PermSet& n, const PermSet& g) {
  for (const auto& x : g)
    for (const auto& y : n)
      if (!n.count(compose(compose(x, y), inverse(x)))) return false;
  return true;
}

inline std::vector<PermSet> normal_subgroups(const PermSet& g) {
  std::vector<PermSet> out;
  for (const auto& h : subgroups(g))
    if (is_normal(h, g)) out.push_back(h);
  return out;
}

/// [a, b] as a subgroup.
inline PermSet commutator(const PermSet& a, const PermSet& b) {
  PermSet gens;
  for (const auto& x : a)
    for (const auto& y : b) gens.insert(compose(compose(inverse(x), inverse(y)), compose(x, y)));
  return generate_set(gens, degree(a));
}

inline bool subset(const PermSet& a, const PermSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// M/N nilpotent: the lower central series of M reaches N.
inline bool nilpotent_mod(const PermSet& m, const PermSet& n) {
  PermSet cur = m;
  for (std::size_t step = 0; step <= m.size(); ++step) {
    if (subset(cur, n)) return true;
    PermSet next = commutator(cur, m);
    PermSet with_n = join(next, n);
    if (with_n == join(cur, n)) return false;
    cur = next;
  }
  return false;
}

/// Fitting height via F_{i+1} = largest normal M >= F_i with M/F_i nilpotent.
/// Returns -1 for nonsolvable input.
inline int fitting_height(const PermSet& g) {
  const auto normals = normal_subgroups(g);
  PermSet cur = generate(std::vector<Perm>{}, degree(g));
  int h = 0;
  while (cur.size() < g.size()) {
    const PermSet* best = nullptr;
    for (const auto& m : normals)
      if (subset(cur, m) && nilpotent_mod(m, cur) && (!best || m.size() > best->size())) best = &m;
    if (!best || best->size() == cur.size()) return -1;
    cur = *best;
    ++h;
  }
  return h;
}

inline Perm cycle(std::size_t n, std::vector<int> c) {
  Perm p = identity(n);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

// ---------------------------------------------------------------------------
// Numeric characters on a Cayley table

using Table = std::vector<std::vector<std::size_t>>;
using cd = std::complex<double>;

inline std::size_t inv(const Table& t, std::size_t x) {
  for (std::size_t y = 0; y < t.size(); ++y)
    if (t[x][y] == 0) return y;
  return 0;
}

/// Induced character from a linear character given on the subgroup `k`.
inline std::vector<cd> induced(const Table& t, const std::set<std::size_t>& k, const std::map<std::size_t, cd>& lambda) {
  std::vector<cd> chi(t.size());
  for (std::size_t g = 0; g < t.size(); ++g) {
    cd s = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
      const std::size_t c = t[t[inv(t, x)][g]][x];
      if (k.count(c)) s += lambda.at(c);
    }
    chi[g] = s / static_cast<double>(k.size());
  }
  return chi;
}

inline cd inner(const std::vector<cd>& a, const std::vector<cd>& b, const std::vector<std::size_t>& over) {
  cd s = 0;
  for (auto g : over) s += a[g] * std::conj(b[g]);
  return s / static_cast<double>(over.size());
}

}  // namespace oracle
