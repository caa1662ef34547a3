#pragma once

// Complex monomial representations over Q(zeta_n), characters as exact
// class functions, homogeneous components of restrictions to normal
// subgroups, and fixed-space dimensions.
//
// Matrices act on column vectors: rho(gh) = rho(g) rho(h). A monomial matrix
// sends basis vector e_j to zeta^exponent[j] * e_target[j].

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goodaction/config.hpp"
#include "goodaction/cyclotomic.hpp"
#include "goodaction/group.hpp"
#include "goodaction/group_core.hpp"

namespace goodaction {

using CVector = std::vector<Cyclotomic>;
using DenseMatrix = std::vector<std::vector<Cyclotomic>>;  // row-major

struct MonomialMatrix {
  std::vector<std::uint32_t> target;
  std::vector<unsigned> exponent;
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

// ---------------------------------------------------------------------------
// Characters

/// A class function on a subgroup `domain` of a Cayley group; values are
/// stored per element of the parent (zero outside the domain).
struct Character {
  Subgroup domain;
  std::vector<Cyclotomic> values;

  const Cyclotomic& operator()(Elem g) const { return values[g]; }
  Cyclotomic degree() const { return values[kIdentity]; }
  friend bool operator==(const Character& a, const Character& b) {
    if (!(a.domain == b.domain)) return false;
    for (auto g = a.domain.mask().find_first(); g != Mask::npos; g = a.domain.mask().find_next(g))
      if (!(a.values[g] == b.values[g])) return false;
    return true;
  }
};

/// (1/|D|) sum_{d in D} a(d) conj(b(d)) over a subgroup D of both domains.
inline BigRational inner_product_on(const Subgroup& d, const Character& a, const Character& b) {
  require(d.is_subset_of(a.domain) && d.is_subset_of(b.domain), ErrorKind::ParentMismatch,
          "inner product outside the characters' domains");
  Cyclotomic sum;
  for (auto g = d.mask().find_first(); g != Mask::npos; g = d.mask().find_next(g))
    sum += a.values[g] * b.values[g].conj();
  require(sum.is_rational(), ErrorKind::InternalError, "inner product is not rational");
  return sum.rational_value() / d.size();
}

inline BigRational inner_product(const Character& a, const Character& b) {
  require(a.domain == b.domain, ErrorKind::ParentMismatch, "characters on different groups");
  return inner_product_on(a.domain, a, b);
}

/// Inner product of genuine characters; must be a nonnegative integer.
inline std::size_t multiplicity_on(const Subgroup& d, const Character& a, const Character& b) {
  const BigRational q = inner_product_on(d, a, b);
  require(boost::multiprecision::denominator(q) == 1 && q >= 0, ErrorKind::InternalError,
          "inner product of characters is not a nonnegative integer");
  return static_cast<std::size_t>(boost::multiprecision::numerator(q));
}

inline Character trivial_character(const Subgroup& d) {
  Character c{d, std::vector<Cyclotomic>(d.group().order())};
  for (auto g = d.mask().find_first(); g != Mask::npos; g = d.mask().find_next(g)) c.values[g] = Cyclotomic::one();
  return c;
}

/// Character values from exponent counts: sum of zeta_n^e over entries.
inline Cyclotomic root_sum(unsigned n, const std::vector<unsigned>& exponents) {
  std::vector<BigInt> coeffs(n, 0);
  for (unsigned e : exponents) coeffs[e % n] += 1;
  return Cyclotomic::from_power_coefficients(n, std::move(coeffs));
}

/// A homomorphism from `domain` into the n-th roots of unity, stored as
/// exponents (value at g is zeta_n^exponent[g]).
struct LinearCharacter {
  Subgroup domain;
  unsigned conductor = 1;
  std::vector<unsigned> exponent;  // by parent element; 0 outside the domain

  Cyclotomic operator()(Elem g) const { return Cyclotomic::zeta(conductor, exponent[g]); }
  bool is_trivial() const {
    for (auto g = domain.mask().find_first(); g != Mask::npos; g = domain.mask().find_next(g))
      if (exponent[g] % conductor) return false;
    return true;
  }
  Character character() const {
    Character c{domain, std::vector<Cyclotomic>(domain.group().order())};
    for (auto g = domain.mask().find_first(); g != Mask::npos; g = domain.mask().find_next(g))
      c.values[g] = (*this)(static_cast<Elem>(g));
    return c;
  }
};

namespace detail {

// Extends generator images multiplicatively; nullopt if inconsistent.
inline std::optional<std::vector<unsigned>> extend_linear(const Subgroup& d, unsigned n, const std::vector<Elem>& gens,
                                                          const std::vector<unsigned>& exps) {
  const Group& G = d.group();
  constexpr unsigned kUnset = ~0u;
  std::vector<unsigned> e(G.order(), kUnset);
  e[kIdentity] = 0;
  std::vector<Elem> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = G.mul(x, gens[j]);
      const unsigned v = (e[x] + exps[j]) % n;
      if (e[y] == kUnset) {
        e[y] = v;
        queue.push_back(y);
      } else if (e[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != d.size()) return std::nullopt;
  for (auto& v : e)
    if (v == kUnset) v = 0;
  return e;
}

}  // namespace detail

/// Linear character from generator images; multiplicativity is verified on
/// all pairs of the domain.
inline LinearCharacter make_linear_character(const Subgroup& d, unsigned conductor, const std::vector<Elem>& gens,
                                             const std::vector<unsigned>& exps) {
  require(gens.size() == exps.size(), ErrorKind::InvalidArgument, "one exponent per generator");
  for (Elem g : gens) require(d.contains(g), ErrorKind::NotASubgroup, "generator outside the domain");
  auto e = detail::extend_linear(d, conductor, gens, exps);
  require(e.has_value(), ErrorKind::NotLinearCharacter, "generator images are not consistent");
  LinearCharacter out{d, conductor, std::move(*e)};
  const Group& G = d.group();
  const auto elems = d.elements();
  for (Elem a : elems)
    for (Elem b : elems)
      require((out.exponent[a] + out.exponent[b]) % conductor == out.exponent[G.mul(a, b)] % conductor,
              ErrorKind::NotLinearCharacter, "values are not multiplicative");
  return out;
}

/// All linear characters of a subgroup, with conductor = exp(domain).
/// Order: lexicographic in the exponents assigned to the domain generators.
inline std::vector<LinearCharacter> linear_characters(const Subgroup& d) {
  const Group& G = d.group();
  unsigned n = 1;
  for (Elem g : d.elements()) n = std::lcm(n, static_cast<unsigned>(G.element_order(g)));
  const auto& gens = d.generators();
  std::vector<LinearCharacter> out;
  std::vector<unsigned> exps(gens.size(), 0);
  // image of a generator of order k is a multiple of n / k
  for (;;) {
    if (auto e = detail::extend_linear(d, n, gens, exps)) out.push_back(LinearCharacter{d, n, std::move(*e)});
    std::size_t i = gens.size();
    while (i-- > 0) {
      const unsigned step = n / static_cast<unsigned>(G.element_order(gens[i]));
      exps[i] += step;
      if (exps[i] < n) break;
      exps[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

/// Character of the induced representation from a linear character of
/// S <= D up to D, by the induction formula.
inline Character induced_character(const LinearCharacter& lambda, const Subgroup& d) {
  const Subgroup& s = lambda.domain;
  require(s.is_subset_of(d), ErrorKind::NotASubgroup, "inducing subgroup is not contained in the target");
  const Group& G = d.group();
  Character c{d, std::vector<Cyclotomic>(G.order())};
  const auto delems = d.elements();
  for (Elem g : delems) {
    std::vector<unsigned> exps;
    for (Elem x : delems) {
      const Elem y = G.conj(g, x);  // x^-1 g x
      if (s.contains(y)) exps.push_back(lambda.exponent[y]);
    }
    c.values[g] = root_sum(lambda.conductor, exps) * Cyclotomic::rational(BigRational(1, s.size()));
  }
  return c;
}

/// Irreducible characters of D that occur in `target` (a character of some
/// group containing D, restricted to D), found among characters induced
/// from linear characters of subgroups of D. Fails if they do not account
/// for the whole restriction.
inline std::vector<Character> irreducible_constituents(const Subgroup& d, const Character& target,
                                                       const Bounds& bounds = {}) {
  const std::size_t degree = static_cast<std::size_t>(
      boost::multiprecision::numerator(target.degree().rational_value()));
  std::vector<Character> found;
  std::size_t covered = 0, squares = 0;
  auto emb = as_group(d);
  auto lattice = all_subgroups(emb.group, bounds);
  for (auto it = lattice.rbegin(); it != lattice.rend() && covered < degree && squares < d.size(); ++it) {
    // lift the subgroup into the parent
    Mask m = d.group().empty_mask();
    for (Elem x : it->elements()) m.set(emb.to_parent[x]);
    const Subgroup s = subgroup_from_mask(d.parent(), m);
    if (d.size() / s.size() > bounds.induction_index) continue;
    for (const auto& lambda : linear_characters(s)) {
      Character psi = induced_character(lambda, d);
      if (inner_product(psi, psi) != 1) continue;
      if (std::any_of(found.begin(), found.end(), [&](const Character& c) { return c == psi; })) continue;
      const std::size_t deg = static_cast<std::size_t>(numerator(psi.degree().rational_value()));
      squares += deg * deg;
      covered += multiplicity_on(d, target, psi) * deg;
      found.push_back(std::move(psi));
      if (covered == degree || squares == d.size()) break;
    }
  }
  require(covered == degree, ErrorKind::Unsupported,
          "constituents of the restriction are not monomial characters of the normal subgroup");
  std::vector<Character> out;
  for (auto& c : found)
    if (multiplicity_on(d, target, c) > 0) out.push_back(std::move(c));
  return out;
}

// ---------------------------------------------------------------------------
// Representations

class ComplexRep {
 public:
  ComplexRep() = default;
  /// Validates the homomorphism property on all element pairs.
  static ComplexRep monomial(GroupPtr group, unsigned conductor, std::vector<MonomialMatrix> matrices) {
    require(matrices.size() == group->order(), ErrorKind::InvalidArgument, "one matrix per group element");
    ComplexRep r;
    r.group_ = std::move(group);
    r.conductor_ = conductor;
    r.degree_ = matrices.front().target.size();
    for (const auto& m : matrices) {
      require(m.target.size() == r.degree_ && m.exponent.size() == r.degree_, ErrorKind::InvalidArgument,
              "monomial matrix has the wrong degree");
      std::vector<bool> hit(r.degree_, false);
      for (auto t : m.target) {
        require(t < r.degree_ && !hit[t], ErrorKind::InvalidArgument, "monomial matrix is singular");
        hit[t] = true;
      }
    }
    r.mats_ = std::move(matrices);
    const Group& G = *r.group_;
    for (Elem g = 0; g < G.order(); ++g)
      for (Elem h = 0; h < G.order(); ++h) {
        const auto& a = r.mats_[g];
        const auto& b = r.mats_[h];
        const auto& c = r.mats_[G.mul(g, h)];
        for (std::size_t j = 0; j < r.degree_; ++j) {
          const auto mid = b.target[j];
          require(c.target[j] == a.target[mid] && c.exponent[j] % conductor == (b.exponent[j] + a.exponent[mid]) % conductor,
                  ErrorKind::NotAHomomorphism, "monomial matrices do not form a representation");
        }
      }
    return r;
  }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }
  unsigned conductor() const noexcept { return conductor_; }
  const MonomialMatrix& monomial_matrix(Elem g) const { return mats_[g]; }

  DenseMatrix dense(Elem g) const {
    DenseMatrix m(degree_, CVector(degree_, Cyclotomic::zero(conductor_)));
    const auto& mm = mats_[g];
    for (std::size_t j = 0; j < degree_; ++j) m[mm.target[j]][j] = Cyclotomic::zeta(conductor_, mm.exponent[j]);
    return m;
  }
  /// rho(g) v
  CVector apply(Elem g, const CVector& v) const {
    CVector out(degree_, Cyclotomic::zero(conductor_));
    const auto& mm = mats_[g];
    for (std::size_t j = 0; j < degree_; ++j)
      if (!v[j].is_zero()) out[mm.target[j]] = v[j] * Cyclotomic::zeta(conductor_, mm.exponent[j]);
    return out;
  }
  Cyclotomic trace(Elem g) const {
    std::vector<unsigned> exps;
    const auto& mm = mats_[g];
    for (std::size_t j = 0; j < degree_; ++j)
      if (mm.target[j] == j) exps.push_back(mm.exponent[j]);
    return root_sum(conductor_, exps);
  }

 private:
  GroupPtr group_;
  std::size_t degree_ = 0;
  unsigned conductor_ = 1;
  std::vector<MonomialMatrix> mats_;
};

inline ComplexRep trivial_rep(const GroupPtr& g) {
  return ComplexRep::monomial(g, 1, std::vector<MonomialMatrix>(g->order(), MonomialMatrix{{0}, {0}}));
}

inline ComplexRep regular_rep(const GroupPtr& g) {
  std::vector<MonomialMatrix> mats;
  for (Elem x = 0; x < g->order(); ++x) {
    MonomialMatrix m{std::vector<std::uint32_t>(g->order()), std::vector<unsigned>(g->order(), 0)};
    for (Elem h = 0; h < g->order(); ++h) m.target[h] = g->mul(x, h);
    mats.push_back(std::move(m));
  }
  return ComplexRep::monomial(g, 1, std::move(mats));
}

/// Character of the whole group; checks chi(g^-1) = conj(chi(g)) and
/// constancy on conjugacy classes.
inline Character character_of(const ComplexRep& rep) {
  const Group& G = *rep.group();
  Character c{whole_group(rep.group()), std::vector<Cyclotomic>(G.order())};
  for (const auto& cls : G.classes()) {
    const Cyclotomic v = rep.trace(cls.front());
    for (Elem g : cls) c.values[g] = v;
  }
  for (const auto& cls : G.classes()) {
    const Elem g = cls.front();
    require(rep.trace(g) == c.values[g] && c.values[G.inv(g)] == c.values[g].conj(), ErrorKind::InternalError,
            "character is not a conjugation-symmetric class function");
  }
  return c;
}

/// Restriction of a character to a subgroup of its domain.
inline Character restrict(const Character& chi, const Subgroup& d) {
  require(d.is_subset_of(chi.domain), ErrorKind::NotASubgroup, "restriction to a non-subgroup");
  Character c{d, std::vector<Cyclotomic>(chi.values.size())};
  for (auto g = d.mask().find_first(); g != Mask::npos; g = d.mask().find_next(g)) c.values[g] = chi.values[g];
  return c;
}

/// Monomial representation induced from a linear character, on the left
/// transversal of smallest coset members (in element order).
inline ComplexRep induce_from_linear(const GroupPtr& g, const LinearCharacter& lambda, const Bounds& bounds = {}) {
  const Subgroup& s = lambda.domain;
  require(s.parent() == g, ErrorKind::ParentMismatch, "character lives on another group");
  const Group& G = *g;
  {
    const auto elems = s.elements();
    for (Elem a : elems)
      for (Elem b : elems)
        require((lambda.exponent[a] + lambda.exponent[b]) % lambda.conductor ==
                    lambda.exponent[G.mul(a, b)] % lambda.conductor,
                ErrorKind::NotLinearCharacter, "character is not multiplicative");
  }
  const std::size_t index = G.order() / s.size();
  require(index <= bounds.induction_index, ErrorKind::IndexBoundExceeded,
          "induction index " + std::to_string(index) + " exceeds the bound");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset(G.order(), kUnset);
  std::vector<Elem> reps;
  const auto selems = s.elements();
  for (Elem x = 0; x < G.order(); ++x) {
    if (coset[x] != kUnset) continue;
    for (Elem a : selems) coset[G.mul(x, a)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  std::vector<MonomialMatrix> mats;
  for (Elem x = 0; x < G.order(); ++x) {
    MonomialMatrix m{std::vector<std::uint32_t>(index), std::vector<unsigned>(index)};
    for (std::size_t j = 0; j < index; ++j) {
      const Elem y = G.mul(x, reps[j]);
      const auto i = coset[y];
      const Elem a = G.mul(G.inv(reps[i]), y);
      m.target[j] = i;
      m.exponent[j] = lambda.exponent[a];
    }
    mats.push_back(std::move(m));
  }
  return ComplexRep::monomial(g, lambda.conductor, std::move(mats));
}

// ---------------------------------------------------------------------------
// Dense linear algebra over Q(zeta_n)

/// Indices of a maximal set of linearly independent columns (pivot columns
/// of Gaussian elimination, scanning left to right).
inline std::vector<std::size_t> pivot_columns(DenseMatrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  if (rows == 0) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Cyclotomic inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Cyclotomic f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const DenseMatrix& m) { return pivot_columns(m).size(); }

inline CVector mat_vec(const DenseMatrix& m, const CVector& v) {
  CVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
  return out;
}

/// sum_{d in D} coeff(d) rho(d)
template <typename Coeff>
DenseMatrix group_algebra_image(const ComplexRep& rep, const Subgroup& d, Coeff coeff) {
  const std::size_t n = rep.degree();
  DenseMatrix m(n, CVector(n));
  for (auto g = d.mask().find_first(); g != Mask::npos; g = d.mask().find_next(g)) {
    const Cyclotomic c = coeff(static_cast<Elem>(g));
    if (c.is_zero()) continue;
    const auto& mm = rep.monomial_matrix(static_cast<Elem>(g));
    for (std::size_t j = 0; j < n; ++j)
      m[mm.target[j]][j] += c * Cyclotomic::zeta(rep.conductor(), mm.exponent[j]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Homogeneous components and fixed spaces

struct HomogeneousComponent {
  std::vector<CVector> basis;
  Character theta;              // irreducible character of N
  std::size_t multiplicity = 0;  // of theta in the restriction
  DenseMatrix projector;        // central idempotent of theta applied to V
  std::size_t dim() const noexcept { return basis.size(); }
};

struct HomogeneousDecomposition {
  Subgroup normal;
  std::vector<HomogeneousComponent> components;
  bool is_homogeneous() const noexcept { return components.size() == 1; }
};

inline bool in_component(const ComplexRep& /*rep*/, const HomogeneousComponent& c, const CVector& v) {
  return mat_vec(c.projector, v) == v;
}

inline HomogeneousDecomposition homogeneous_components(const ComplexRep& rep, const Subgroup& n,
                                                       const Bounds& bounds = {}) {
  require(n.parent() == rep.group(), ErrorKind::ParentMismatch, "normal subgroup of another group");
  require(is_normal(n), ErrorKind::NotNormal, "homogeneous components need a normal subgroup");
  const Character chi = character_of(rep);
  const Character chi_n = restrict(chi, n);
  HomogeneousDecomposition out{n, {}};
  std::size_t total = 0;
  for (auto& theta : irreducible_constituents(n, chi_n, bounds)) {
    HomogeneousComponent comp;
    comp.multiplicity = multiplicity_on(n, chi_n, theta);
    const Cyclotomic scale = theta.degree() * Cyclotomic::rational(BigRational(1, n.size()));
    comp.projector = group_algebra_image(rep, n, [&](Elem g) { return scale * theta(rep.group()->inv(g)); });
    for (std::size_t col : pivot_columns(comp.projector)) {
      CVector v(rep.degree());
      for (std::size_t i = 0; i < rep.degree(); ++i) v[i] = comp.projector[i][col];
      comp.basis.push_back(std::move(v));
    }
    const auto deg = static_cast<std::size_t>(numerator(theta.degree().rational_value()));
    require(comp.dim() == comp.multiplicity * deg, ErrorKind::InternalError,
            "isotypic component has the wrong dimension");
    for (const auto& b : comp.basis)
      for (Elem s : n.generators())
        require(in_component(rep, comp, rep.apply(s, b)), ErrorKind::InternalError,
                "isotypic component is not N-invariant");
    total += comp.dim();
    comp.theta = std::move(theta);
    out.components.push_back(std::move(comp));
  }
  require(total == rep.degree(), ErrorKind::InternalError, "component dimensions do not sum to the degree");
  return out;
}

/// Permutation of components induced by g (which must normalize N):
/// result[i] = index of rho(g) W_i.
inline std::vector<std::size_t> component_action(const ComplexRep& rep, const HomogeneousDecomposition& dec, Elem g) {
  const Group& G = *rep.group();
  require(normalizes(dec.normal, g), ErrorKind::NotNormal, "element does not normalize N");
  std::vector<std::size_t> perm;
  for (const auto& comp : dec.components) {
    // rho(g) W_theta is the component of n -> theta(g^-1 n g)
    Character moved{dec.normal, std::vector<Cyclotomic>(G.order())};
    for (auto x = dec.normal.mask().find_first(); x != Mask::npos; x = dec.normal.mask().find_next(x))
      moved.values[x] = comp.theta(G.conj(static_cast<Elem>(x), g));
    std::optional<std::size_t> target;
    for (std::size_t j = 0; j < dec.components.size(); ++j)
      if (dec.components[j].theta == moved) target = j;
    require(target.has_value(), ErrorKind::InternalError, "conjugate character is not a constituent");
    for (const auto& b : comp.basis)
      require(in_component(rep, dec.components[*target], rep.apply(g, b)), ErrorKind::InternalError,
              "image of a component basis vector left the matched component");
    perm.push_back(*target);
  }
  return perm;
}

/// Stabilizer of component i inside a subgroup H normalizing N.
inline Subgroup component_stabilizer(const ComplexRep& rep, const HomogeneousDecomposition& dec, std::size_t i,
                                     const Subgroup& h) {
  Mask m = h.group().empty_mask();
  for (Elem g : h.elements())
    if (component_action(rep, dec, g)[i] == i) m.set(g);
  return subgroup_from_mask(h.parent(), m);
}

/// dim C_V(B), computed as <chi_B, 1_B> and as the rank of the averaging
/// projector; the two must agree.
inline std::size_t fixed_space_dim(const ComplexRep& rep, const Subgroup& b) {
  require(b.parent() == rep.group(), ErrorKind::ParentMismatch, "subgroup of another group");
  const Character chi = character_of(rep);
  const std::size_t by_character = multiplicity_on(b, chi, trivial_character(b));
  const Cyclotomic w = Cyclotomic::rational(BigRational(1, b.size()));
  const std::size_t by_rank = rank(group_algebra_image(rep, b, [&](Elem) { return w; }));
  require(by_character == by_rank, ErrorKind::InternalError, "fixed-space dimension routes disagree");
  return by_character;
}

/// Kernel of the representation.
inline Subgroup rep_kernel(const ComplexRep& rep) {
  const Group& G = *rep.group();
  Mask m = G.empty_mask();
  for (Elem g = 0; g < G.order(); ++g) {
    const auto& mm = rep.monomial_matrix(g);
    bool id = true;
    for (std::size_t j = 0; j < rep.degree() && id; ++j)
      id = mm.target[j] == j && mm.exponent[j] % rep.conductor() == 0;
    if (id) m.set(g);
  }
  return subgroup_from_mask(rep.group(), m);
}

}  // namespace goodaction
