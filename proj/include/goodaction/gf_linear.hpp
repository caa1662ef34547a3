#pragma once

// Linear algebra over GF(p), group modules, submodule spinning, a light
// MeatAxe (Norton irreducibility test), and affine groups V : H.
//
// Vectors over GF(2) are packed 64 entries per word; other primes use one
// byte per entry. Matrices act on row vectors from the right, so a module
// over H satisfies  v * M(xy) = (v * M(x)) * M(y).

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <unordered_set>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "goodaction/config.hpp"
#include "goodaction/group.hpp"
#include "goodaction/group_core.hpp"
#include "goodaction/primes.hpp"

namespace goodaction {

using BigInt = boost::multiprecision::cpp_int;

inline unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime: a^(p-2)
  unsigned r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// A row vector over GF(p).
class GFVector {
 public:
  GFVector() = default;
  GFVector(unsigned p, std::size_t dim) : p_(p), dim_(dim) {
    if (p_ == 2)
      bits_.assign((dim + 63) / 64, 0);
    else
      bytes_.assign(dim, 0);
  }
  static GFVector unit(unsigned p, std::size_t dim, std::size_t i) {
    GFVector v(p, dim);
    v.set(i, 1);
    return v;
  }

  unsigned prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }

  unsigned get(std::size_t i) const {
    return p_ == 2 ? static_cast<unsigned>(bits_[i >> 6] >> (i & 63) & 1u) : bytes_[i];
  }
  void set(std::size_t i, unsigned value) {
    value %= p_;
    if (p_ == 2) {
      const std::uint64_t bit = std::uint64_t{1} << (i & 63);
      if (value)
        bits_[i >> 6] |= bit;
      else
        bits_[i >> 6] &= ~bit;
    } else {
      bytes_[i] = static_cast<std::uint8_t>(value);
    }
  }

  /// this += c * other
  void add_scaled(unsigned c, const GFVector& other) {
    c %= p_;
    if (c == 0) return;
    if (p_ == 2) {
      for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] ^= other.bits_[w];
    } else {
      for (std::size_t i = 0; i < dim_; ++i)
        bytes_[i] = static_cast<std::uint8_t>((bytes_[i] + c * other.bytes_[i]) % p_);
    }
  }
  GFVector& operator+=(const GFVector& o) {
    add_scaled(1, o);
    return *this;
  }
  GFVector& operator-=(const GFVector& o) {
    add_scaled(p_ - 1, o);
    return *this;
  }
  friend GFVector operator+(GFVector a, const GFVector& b) { return a += b; }
  friend GFVector operator-(GFVector a, const GFVector& b) { return a -= b; }
  GFVector negated() const {
    GFVector r(p_, dim_);
    r.add_scaled(p_ - 1, *this);
    return r;
  }
  void scale(unsigned c) {
    c %= p_;
    if (p_ == 2) {
      if (c == 0) std::fill(bits_.begin(), bits_.end(), 0);
    } else {
      for (auto& b : bytes_) b = static_cast<std::uint8_t>(b * c % p_);
    }
  }

  bool is_zero() const {
    if (p_ == 2) return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
    return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
  }
  /// index of first nonzero entry, or dim() if zero
  std::size_t leading() const {
    if (p_ == 2) {
      for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits_[w]));
      return dim_;
    }
    for (std::size_t i = 0; i < dim_; ++i)
      if (bytes_[i]) return i;
    return dim_;
  }

  friend bool operator==(const GFVector& a, const GFVector& b) {
    return a.p_ == b.p_ && a.dim_ == b.dim_ && a.bits_ == b.bits_ && a.bytes_ == b.bytes_;
  }
  friend bool operator<(const GFVector& a, const GFVector& b) {
    if (a.bits_ != b.bits_) return a.bits_ < b.bits_;
    return a.bytes_ < b.bytes_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) s += std::to_string(get(i));
    return s;
  }

 private:
  unsigned p_ = 2;
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> bytes_;
};

/// rows x cols matrix over GF(p), stored as row vectors.
class GFMatrix {
 public:
  GFMatrix() = default;
  GFMatrix(unsigned p, std::size_t rows, std::size_t cols) : p_(p), cols_(cols), rows_(rows, GFVector(p, cols)) {}
  static GFMatrix identity(unsigned p, std::size_t d) {
    GFMatrix m(p, d, d);
    for (std::size_t i = 0; i < d; ++i) m.rows_[i].set(i, 1);
    return m;
  }

  unsigned prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const GFVector& row(std::size_t i) const { return rows_[i]; }
  GFVector& row(std::size_t i) { return rows_[i]; }
  unsigned get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, unsigned v) { rows_[i].set(j, v); }

  GFMatrix transposed() const {
    GFMatrix t(p_, cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (unsigned v = get(i, j)) t.set(j, i, v);
    return t;
  }

  friend bool operator==(const GFMatrix& a, const GFMatrix& b) {
    return a.p_ == b.p_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const GFMatrix& a, const GFMatrix& b) { return a.rows_ < b.rows_; }

 private:
  unsigned p_ = 2;
  std::size_t cols_ = 0;
  std::vector<GFVector> rows_;
};

/// v * M
inline GFVector operator*(const GFVector& v, const GFMatrix& m) {
  require(v.dim() == m.rows(), ErrorKind::InvalidArgument, "dimension mismatch in vector * matrix");
  GFVector out(m.prime(), m.cols());
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (unsigned c = v.get(i)) out.add_scaled(c, m.row(i));
  return out;
}

inline GFMatrix operator*(const GFMatrix& a, const GFMatrix& b) {
  GFMatrix out(a.prime(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out.row(i) = a.row(i) * b;
  return out;
}

inline GFMatrix operator+(const GFMatrix& a, const GFMatrix& b) {
  GFMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.row(i) += b.row(i);
  return out;
}

inline GFMatrix scaled(const GFMatrix& a, unsigned c) {
  GFMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.row(i).scale(c);
  return out;
}

/// A subspace kept in semi-echelon form: each stored row has a pivot
/// (leading entry 1) at which every later row vanishes.
class RowSpace {
 public:
  RowSpace(unsigned p, std::size_t dim) : p_(p), dim_(dim) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<GFVector>& rows() const noexcept { return rows_; }

  GFVector reduce(GFVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (unsigned c = v.get(pivots_[i])) v.add_scaled(p_ - c, rows_[i]);
    return v;
  }
  bool contains(const GFVector& v) const { return reduce(v).is_zero(); }

  /// Adds v; returns the reduced new row if v was outside the space.
  std::optional<GFVector> insert(const GFVector& v) {
    GFVector r = reduce(v);
    if (r.is_zero()) return std::nullopt;
    const std::size_t piv = r.leading();
    r.scale(inv_mod(r.get(piv), p_));
    rows_.push_back(r);
    pivots_.push_back(piv);
    return r;
  }

  /// Reduced row echelon basis, sorted by pivot column.
  std::vector<GFVector> canonical_basis() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<GFVector> out;
    for (std::size_t idx : order) out.push_back(rows_[idx]);
    // back-substitute so each pivot column is a unit column
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t piv = out[i].leading();
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != i)
          if (unsigned c = out[j].get(piv)) out[j].add_scaled(p_ - c, out[i]);
    }
    return out;
  }

 private:
  unsigned p_;
  std::size_t dim_;
  std::vector<GFVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const GFMatrix& m) {
  RowSpace s(m.prime(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
  return s.rank();
}

/// Basis of {v : v * m = 0}.
inline std::vector<GFVector> left_nullspace(const GFMatrix& m) {
  const unsigned p = m.prime();
  const std::size_t r = m.rows(), c = m.cols();
  // augmented rows [m_i | e_i]
  std::vector<GFVector> aug;
  for (std::size_t i = 0; i < r; ++i) {
    GFVector v(p, c + r);
    for (std::size_t j = 0; j < c; ++j) v.set(j, m.get(i, j));
    v.set(c + i, 1);
    aug.push_back(std::move(v));
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < c && lead < r; ++col) {
    std::size_t piv = lead;
    while (piv < r && aug[piv].get(col) == 0) ++piv;
    if (piv == r) continue;
    std::swap(aug[piv], aug[lead]);
    aug[lead].scale(inv_mod(aug[lead].get(col), p));
    for (std::size_t i = 0; i < r; ++i)
      if (i != lead)
        if (unsigned v = aug[i].get(col)) aug[i].add_scaled(p - v, aug[lead]);
    ++lead;
  }
  std::vector<GFVector> out;
  for (std::size_t i = lead; i < r; ++i) {
    GFVector v(p, r);
    for (std::size_t j = 0; j < r; ++j) v.set(j, aug[i].get(c + j));
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<GFMatrix> inverse(const GFMatrix& m) {
  const unsigned p = m.prime();
  const std::size_t d = m.rows();
  if (m.cols() != d) return std::nullopt;
  std::vector<GFVector> aug;
  for (std::size_t i = 0; i < d; ++i) {
    GFVector v(p, 2 * d);
    for (std::size_t j = 0; j < d; ++j) v.set(j, m.get(i, j));
    v.set(d + i, 1);
    aug.push_back(std::move(v));
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && aug[piv].get(col) == 0) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    aug[col].scale(inv_mod(aug[col].get(col), p));
    for (std::size_t i = 0; i < d; ++i)
      if (i != col)
        if (unsigned v = aug[i].get(col)) aug[i].add_scaled(p - v, aug[col]);
  }
  GFMatrix out(p, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.set(i, j, aug[i].get(d + j));
  return out;
}

// ---------------------------------------------------------------------------
// Modules

class GModule;
using GModulePtr = std::shared_ptr<const GModule>;

/// A representation of a Cayley group over GF(p), given by matrices for a
/// list of generating elements. The matrix of every element is derived at
/// construction; the homomorphism property is verified on every edge of the
/// Cayley graph (and on all pairs for groups of order <= 200).
class GModule {
 public:
  static GModulePtr make(GroupPtr group, unsigned p, std::size_t dim, std::vector<Elem> generators,
                         std::vector<GFMatrix> matrices);
  /// Uses the group's own generating set.
  static GModulePtr make(GroupPtr group, unsigned p, std::vector<GFMatrix> matrices) {
    auto gens = group->generators();
    const std::size_t d = matrices.empty() ? 0 : matrices.front().rows();
    return make(std::move(group), p, d, std::move(gens), std::move(matrices));
  }

  const GroupPtr& group() const noexcept { return group_; }
  unsigned prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const std::vector<GFMatrix>& generator_matrices() const noexcept { return gen_matrices_; }
  const GFMatrix& matrix(Elem g) const { return element_matrices_[g]; }

  /// Elements acting as the identity.
  Subgroup kernel() const;
  bool is_faithful() const { return kernel().is_trivial(); }

 private:
  GModule() = default;
  GroupPtr group_;
  unsigned p_ = 2;
  std::size_t dim_ = 0;
  std::vector<Elem> generators_;
  std::vector<GFMatrix> gen_matrices_;
  std::vector<GFMatrix> element_matrices_;
};

inline GModulePtr GModule::make(GroupPtr group, unsigned p, std::size_t dim, std::vector<Elem> generators,
                                std::vector<GFMatrix> matrices) {
  require(is_prime(p) && p < 256, ErrorKind::InvalidArgument, "module prime must be a prime below 256");
  require(generators.size() == matrices.size(), ErrorKind::InvalidArgument, "one matrix per generator");
  for (const auto& m : matrices) {
    require(m.prime() == p && m.rows() == dim && m.cols() == dim, ErrorKind::InvalidArgument,
            "generator matrix has the wrong shape or field");
    require(inverse(m).has_value(), ErrorKind::InvalidArgument, "generator matrix is singular");
  }
  require(closure(group, generators).size() == group->order(), ErrorKind::InvalidArgument,
          "module generators do not generate the group");
  auto* mod = new GModule();
  GModulePtr ptr(mod);
  mod->group_ = group;
  mod->p_ = p;
  mod->dim_ = dim;
  mod->generators_ = std::move(generators);
  mod->gen_matrices_ = std::move(matrices);
  const Group& G = *group;
  std::vector<GFMatrix> em(G.order());
  std::vector<bool> done(G.order(), false);
  em[kIdentity] = GFMatrix::identity(p, dim);
  done[kIdentity] = true;
  std::vector<Elem> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < mod->generators_.size(); ++j) {
      const Elem y = G.mul(x, mod->generators_[j]);
      GFMatrix prod = em[x] * mod->gen_matrices_[j];
      if (!done[y]) {
        em[y] = std::move(prod);
        done[y] = true;
        queue.push_back(y);
      } else if (!(em[y] == prod)) {
        fail(ErrorKind::NotAHomomorphism, "module matrices violate a relation of the group");
      }
    }
  }
  if (G.order() <= 200 && dim <= 64) {
    for (Elem x = 0; x < G.order(); ++x)
      for (Elem y = 0; y < G.order(); ++y)
        require(em[G.mul(x, y)] == em[x] * em[y], ErrorKind::NotAHomomorphism, "module is not a homomorphism");
  }
  mod->element_matrices_ = std::move(em);
  return ptr;
}

inline Subgroup GModule::kernel() const {
  const GFMatrix id = GFMatrix::identity(p_, dim_);
  Mask m = group_->empty_mask();
  for (Elem g = 0; g < group_->order(); ++g)
    if (element_matrices_[g] == id) m.set(g);
  return subgroup_from_mask(group_, m);
}

/// A submodule, stored as a reduced row echelon basis.
struct Submodule {
  GModulePtr module;
  std::vector<GFVector> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  bool is_zero() const noexcept { return basis.empty(); }
  bool is_full() const { return basis.size() == module->dim(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_full(); }
  RowSpace space() const {
    RowSpace s(module->prime(), module->dim());
    for (const auto& b : basis) s.insert(b);
    return s;
  }
  bool contains(const GFVector& v) const { return space().contains(v); }
  /// Closed under every generator matrix.
  bool is_invariant() const {
    auto s = space();
    for (const auto& m : module->generator_matrices())
      for (const auto& b : basis)
        if (!s.contains(b * m)) return false;
    return true;
  }
  /// Size as a set: p^dim.
  BigInt order() const { return boost::multiprecision::pow(BigInt(module->prime()), static_cast<unsigned>(dim())); }
};

namespace detail {

inline std::vector<GFVector> spin_space(const std::vector<GFMatrix>& gens, RowSpace& space,
                                        const std::vector<GFVector>& seeds) {
  std::vector<GFVector> queue;
  for (const auto& v : seeds)
    if (auto r = space.insert(v)) queue.push_back(*r);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& m : gens)
      if (auto r = space.insert(queue[i] * m)) queue.push_back(*r);
  return space.canonical_basis();
}

}  // namespace detail

/// Smallest submodule containing all of `seeds`.
inline Submodule spin(const GModulePtr& m, const std::vector<GFVector>& seeds) {
  for (const auto& v : seeds)
    require(v.dim() == m->dim() && v.prime() == m->prime(), ErrorKind::InvalidArgument, "spin: dimension mismatch");
  RowSpace space(m->prime(), m->dim());
  return Submodule{m, detail::spin_space(m->generator_matrices(), space, seeds)};
}

inline Submodule spin(const GModulePtr& m, const GFVector& v) { return spin(m, std::vector<GFVector>{v}); }

/// Action on a submodule, in the coordinates of its echelon basis.
inline GModulePtr submodule_action(const Submodule& s) {
  const auto& m = *s.module;
  std::vector<std::size_t> pivots;
  for (const auto& b : s.basis) pivots.push_back(b.leading());
  std::vector<GFMatrix> mats;
  for (const auto& g : m.generator_matrices()) {
    GFMatrix a(m.prime(), s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      GFVector img = s.basis[i] * g;
      for (std::size_t j = 0; j < s.dim(); ++j) a.set(i, j, img.get(pivots[j]));
    }
    mats.push_back(std::move(a));
  }
  return GModule::make(m.group(), m.prime(), s.dim(), m.generators(), std::move(mats));
}

/// Action on M / S, in the coordinates of the non-pivot unit vectors.
inline GModulePtr quotient_action(const Submodule& s) {
  const auto& m = *s.module;
  const auto space = s.space();
  std::vector<bool> is_pivot(m.dim(), false);
  for (const auto& b : s.basis) is_pivot[b.leading()] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t q = free_cols.size();
  std::vector<GFMatrix> mats;
  for (const auto& g : m.generator_matrices()) {
    GFMatrix a(m.prime(), q, q);
    for (std::size_t i = 0; i < q; ++i) {
      GFVector img = space.reduce(GFVector::unit(m.prime(), m.dim(), free_cols[i]) * g);
      for (std::size_t j = 0; j < q; ++j) a.set(i, j, img.get(free_cols[j]));
    }
    mats.push_back(std::move(a));
  }
  return GModule::make(m.group(), m.prime(), q, m.generators(), std::move(mats));
}

// ---------------------------------------------------------------------------
// Irreducibility

struct IrreducibilityVerdict {
  bool irreducible = false;
  std::optional<Submodule> witness;  // proper nonzero submodule when reducible
  std::string method;                // "norton", "exhaustive", "trivial"
  std::uint64_t seed = 0;
  bool cross_checked = false;
};

namespace detail {

// Every nonzero vector of span(basis) with leading coefficient 1.
inline std::vector<GFVector> projective_points(const std::vector<GFVector>& basis, unsigned p, std::size_t dim) {
  std::vector<GFVector> out;
  const std::size_t k = basis.size();
  std::vector<unsigned> coeff(k, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < k && coeff[i] == p - 1) coeff[i++] = 0;
    if (i == k) break;
    ++coeff[i];
    // leading nonzero coefficient must be 1
    std::size_t lead = k;
    for (std::size_t j = k; j-- > 0;)
      if (coeff[j]) {
        lead = j;
        break;
      }
    if (coeff[lead] != 1) continue;
    GFVector v(p, dim);
    for (std::size_t j = 0; j < k; ++j) v.add_scaled(coeff[j], basis[j]);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Submodule> exhaustive_witness(const GModulePtr& m) {
  std::vector<GFVector> unit_basis;
  for (std::size_t i = 0; i < m->dim(); ++i) unit_basis.push_back(GFVector::unit(m->prime(), m->dim(), i));
  for (const auto& v : projective_points(unit_basis, m->prime(), m->dim())) {
    auto s = spin(m, v);
    if (!s.is_full()) return s;
  }
  return std::nullopt;
}

}  // namespace detail

/// Norton's irreducibility test with a seeded random algebra element; when
/// p^d <= 4096 the verdict is cross-checked by spinning every vector.
inline IrreducibilityVerdict is_irreducible(const GModulePtr& m, std::uint64_t seed = 1) {
  IrreducibilityVerdict out;
  out.seed = seed;
  const unsigned p = m->prime();
  const std::size_t d = m->dim();
  require(d >= 1, ErrorKind::InvalidArgument, "is_irreducible needs a nonzero module");
  const bool small = std::pow(static_cast<double>(p), static_cast<double>(d)) <= 4096.0;
  if (d == 1) {
    out.irreducible = true;
    out.method = "trivial";
    return out;
  }
  const auto& gens = m->generator_matrices();
  std::vector<GFMatrix> transposed;
  for (const auto& g : gens) transposed.push_back(g.transposed());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> coef(0, p - 1);
  std::optional<bool> norton;
  // pool of words in the generators
  std::vector<GFMatrix> words = gens;
  for (int attempt = 0; attempt < 256 && !norton; ++attempt) {
    {
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      GFMatrix w = words[pick(rng)] * words[pick(rng)];
      if (words.size() < 64) words.push_back(w);
      else words[pick(rng)] = w;
    }
    GFMatrix theta(p, d, d);
    for (const auto& w : words)
      if (unsigned c = coef(rng)) theta = theta + scaled(w, c);
    for (unsigned lambda = 0; lambda < p && !norton; ++lambda) {
      GFMatrix shifted = theta + scaled(GFMatrix::identity(p, d), (p - lambda) % p);
      auto kernel = left_nullspace(shifted);
      if (kernel.empty() || std::pow(static_cast<double>(p), static_cast<double>(kernel.size())) > 256.0) continue;
      // Norton: a proper submodule either meets ker(theta) or its
      // annihilator meets ker(theta^T) in the dual.
      bool reducible = false;
      for (const auto& v : detail::projective_points(kernel, p, d)) {
        auto s = spin(m, v);
        if (!s.is_full()) {
          out.witness = s;
          reducible = true;
          break;
        }
      }
      if (!reducible) {
        auto dual_kernel = left_nullspace(shifted.transposed());
        for (const auto& w : detail::projective_points(dual_kernel, p, d)) {
          RowSpace space(p, d);
          auto dual_sub = detail::spin_space(transposed, space, {w});
          if (dual_sub.size() == d) continue;
          GFMatrix cols(p, d, dual_sub.size());
          for (std::size_t j = 0; j < dual_sub.size(); ++j)
            for (std::size_t i = 0; i < d; ++i) cols.set(i, j, dual_sub[j].get(i));
          auto ann = left_nullspace(cols);
          out.witness = spin(m, ann);
          reducible = true;
          break;
        }
      }
      norton = !reducible;
    }
  }
  if (norton) {
    out.irreducible = *norton;
    out.method = "norton";
  }
  if (small) {
    auto w = detail::exhaustive_witness(m);
    const bool exhaustive_irreducible = !w.has_value();
    if (norton) {
      require(exhaustive_irreducible == *norton, ErrorKind::InternalError,
              "Norton test disagrees with exhaustive spinning");
      out.cross_checked = true;
    } else {
      out.irreducible = exhaustive_irreducible;
      out.witness = w;
      out.method = "exhaustive";
    }
  } else if (!norton) {
    fail(ErrorKind::SearchExhausted, "no usable singular algebra element found for the Norton test");
  }
  if (out.witness)
    require(out.witness->is_proper_nonzero() && out.witness->is_invariant(), ErrorKind::InternalError,
            "irreducibility witness is not a proper submodule");
  return out;
}

/// Composition factors by repeated splitting.
inline std::vector<GModulePtr> composition_factors(const GModulePtr& m, std::uint64_t seed = 1) {
  std::vector<GModulePtr> out;
  std::vector<GModulePtr> work{m};
  while (!work.empty()) {
    auto cur = work.back();
    work.pop_back();
    if (cur->dim() == 0) continue;
    auto verdict = is_irreducible(cur, seed);
    if (verdict.irreducible) {
      out.push_back(cur);
      continue;
    }
    work.push_back(quotient_action(*verdict.witness));
    work.push_back(submodule_action(*verdict.witness));
  }
  return out;
}

/// Permutation module of H on the right cosets Kx of K.
inline GModulePtr permutation_module(const Subgroup& k, unsigned p) {
  const GroupPtr& h = k.parent();
  const Group& H = *h;
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(H.order(), kUnset);
  std::vector<Elem> reps;
  const auto ke = k.elements();
  for (Elem x = 0; x < H.order(); ++x) {
    if (coset[x] != kUnset) continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y : ke) coset[H.mul(y, x)] = idx;
  }
  const std::size_t d = reps.size();
  std::vector<GFMatrix> mats;
  for (Elem s : H.generators()) {
    GFMatrix m(p, d, d);
    for (std::size_t i = 0; i < d; ++i) m.set(i, coset[H.mul(reps[i], s)], 1);
    mats.push_back(std::move(m));
  }
  return GModule::make(h, p, d, H.generators(), std::move(mats));
}

struct FaithfulModuleSearch {
  GModulePtr module;
  std::size_t dimension = 0;
  std::size_t coset_subgroup_order = 0;  // |K| of the permutation module that was chopped
  std::size_t permutation_degree = 0;
  std::size_t subgroups_tried = 0;
  std::uint64_t seed = 0;
};

/// A faithful irreducible H-module over GF(p), found by chopping permutation
/// modules on cosets of proper subgroups, largest subgroups first.
inline FaithfulModuleSearch faithful_irreducible_module(const GroupPtr& h, unsigned p, const Bounds& bounds = {},
                                                        std::uint64_t seed = 1) {
  require(is_prime(p), ErrorKind::InvalidArgument, "p must be prime");
  require(p_core(h, p).is_trivial(), ErrorKind::PreconditionFailed, "O_p(H) is not trivial");
  std::size_t minimal = 0;
  {
    auto normals = normal_subgroups(h, bounds);
    for (const auto& n : normals) {
      if (n.is_trivial()) continue;
      bool is_min = true;
      for (const auto& other : normals)
        if (!other.is_trivial() && other.size() < n.size() && other.is_subset_of(n)) is_min = false;
      if (is_min) ++minimal;
    }
  }
  require(minimal == 1, ErrorKind::PreconditionFailed, "H does not have a unique minimal normal subgroup");
  auto lattice = all_subgroups(h, bounds);
  std::unordered_set<Mask, MaskHash> tried;
  FaithfulModuleSearch out;
  out.seed = seed;
  for (auto it = lattice.rbegin(); it != lattice.rend(); ++it) {
    const Subgroup& k = *it;
    if (k.is_whole() || tried.count(k.mask())) continue;
    const std::size_t degree = h->order() / k.size();
    if (degree > bounds.module_dimension) continue;
    for (const auto& c : conjugates(k)) tried.insert(c.mask());
    ++out.subgroups_tried;
    for (const auto& factor : composition_factors(permutation_module(k, p), seed)) {
      if (!factor->is_faithful()) continue;
      out.module = factor;
      out.dimension = factor->dim();
      out.coset_subgroup_order = k.size();
      out.permutation_degree = degree;
      return out;
    }
  }
  fail(ErrorKind::SearchExhausted, "no faithful irreducible constituent within the module-size bound");
}

// ---------------------------------------------------------------------------
// Affine groups V : H

/// Elements (v, h) with (v1, h1)(v2, h2) = (v1 + h1.v2, h1 h2), where
/// h.v = v * M(h^-1) turns the right module action into a left action.
class AffineGroup {
 public:
  struct Element {
    GFVector v;
    Elem h = kIdentity;
    friend bool operator==(const Element&, const Element&) = default;
  };

  explicit AffineGroup(GModulePtr module) : module_(std::move(module)) {}

  const GModulePtr& module() const noexcept { return module_; }
  const GroupPtr& point_group() const noexcept { return module_->group(); }
  BigInt order() const {
    return boost::multiprecision::pow(BigInt(module_->prime()), static_cast<unsigned>(module_->dim())) *
           point_group()->order();
  }

  Element identity() const { return {GFVector(module_->prime(), module_->dim()), kIdentity}; }
  Element vector(const GFVector& v) const { return {v, kIdentity}; }
  Element point(Elem h) const { return {GFVector(module_->prime(), module_->dim()), h}; }

  GFVector act(Elem h, const GFVector& v) const { return v * module_->matrix(point_group()->inv(h)); }

  Element mul(const Element& a, const Element& b) const { return {a.v + act(a.h, b.v), point_group()->mul(a.h, b.h)}; }
  Element inv(const Element& a) const {
    const Elem hi = point_group()->inv(a.h);
    return {act(hi, a.v).negated(), hi};
  }
  Element conj(const Element& x, const Element& g) const { return mul(inv(g), mul(x, g)); }
  Element comm(const Element& a, const Element& b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::size_t element_order(const Element& a) const {
    std::size_t k = 1;
    Element x = a;
    const Element e = identity();
    while (!(x == e)) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }
  /// Generators: the unit vectors and the point group's generators.
  std::vector<Element> generators() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < module_->dim(); ++i)
      out.push_back(vector(GFVector::unit(module_->prime(), module_->dim(), i)));
    for (Elem s : point_group()->generators()) out.push_back(point(s));
    return out;
  }
  Element random_element(std::mt19937_64& rng) const {
    GFVector v(module_->prime(), module_->dim());
    std::uniform_int_distribution<unsigned> c(0, module_->prime() - 1);
    for (std::size_t i = 0; i < module_->dim(); ++i) v.set(i, c(rng));
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(point_group()->order() - 1));
    return {v, pick(rng)};
  }
  bool is_central(const Element& x) const {
    for (const auto& s : generators())
      if (!(mul(x, s) == mul(s, x))) return false;
    return true;
  }

 private:
  GModulePtr module_;
};

inline AffineGroup affine_group(const GModulePtr& v) {
  for (const auto& m : v->generator_matrices())
    require(inverse(m).has_value(), ErrorKind::InvalidArgument, "module matrices must be invertible");
  return AffineGroup(v);
}

/// [G, <x>] for G = V : H, described by its split structure: the V-part
/// W = [G,x] meet V, the H-part L (projection onto H), and a coset
/// representative f(l) for each l in L, so that (v, l) lies in [G,x] iff
/// v - f(l) is in W.
struct AffineCommutator {
  Submodule v_part;
  Subgroup h_part;
  std::vector<GFVector> lift;  // indexed by element of H; meaningful on L
  BigInt order;                // |[G,A]|
  BigInt quotient_order;       // |GA / [G,A]|
  std::size_t automorphism_order = 1;  // |A| = order of conjugation by x
  BigInt gcd;

  bool contains(const AffineGroup::Element& e) const {
    if (!h_part.contains(e.h)) return false;
    return v_part.contains(e.v - lift[e.h]);
  }
};

inline AffineCommutator affine_commutator_with(const AffineGroup& g, const AffineGroup::Element& x) {
  const auto& mod = g.module();
  const GroupPtr& hp = g.point_group();
  const Group& H = *hp;
  const unsigned p = mod->prime();
  const std::size_t d = mod->dim();
  require(x.v.dim() == d && x.h < H.order(), ErrorKind::InvalidArgument, "conjugator is not an element of G");

  AffineCommutator out;
  // |A|: smallest m with x^m central
  {
    AffineGroup::Element y = x;
    std::size_t m = 1;
    while (!g.is_central(y)) {
      y = g.mul(y, x);
      ++m;
    }
    out.automorphism_order = m;
  }
  // H-part: L = <[h, x_h] : h in H>
  const Subgroup l = commutator_subgroup(whole_group(hp), closure(hp, {x.h}));
  out.h_part = l;

  // W' = H-spin of [V, x] and [V, L]
  std::vector<GFVector> seeds;
  for (std::size_t i = 0; i < d; ++i) {
    const auto e = g.vector(GFVector::unit(p, d, i));
    auto c = g.comm(e, x);
    require(c.h == kIdentity, ErrorKind::InternalError, "[v, x] left V");
    seeds.push_back(c.v);
    for (Elem s : l.generators()) seeds.push_back(g.act(H.inv(s), e.v) - e.v);
  }
  RowSpace space(p, d);
  detail::spin_space(mod->generator_matrices(), space, seeds);

  // Generators of [G,x] modulo W': H-conjugates of [s, x] for generators s.
  struct Gen {
    GFVector v;
    Elem h;
  };
  std::vector<Gen> gens;
  {
    std::set<std::pair<Elem, GFVector>> seen;
    for (const auto& s : g.generators()) {
      const auto c = g.comm(s, x);
      for (Elem h = 0; h < H.order(); ++h) {
        auto cc = g.conj(c, g.point(h));
        GFVector red = space.reduce(cc.v);
        if (seen.emplace(cc.h, red).second) gens.push_back({red, cc.h});
      }
    }
  }
  // Schreier: coset reps over L, edge differences generate the V-part.
  constexpr Elem kUnset = ~Elem{0};
  std::vector<GFVector> rep(H.order());
  std::vector<Elem> reached(H.order(), kUnset);
  std::vector<Elem> order_list{kIdentity};
  rep[kIdentity] = GFVector(p, d);
  reached[kIdentity] = 0;
  for (std::size_t i = 0; i < order_list.size(); ++i) {
    const Elem a = order_list[i];
    for (const auto& s : gens) {
      const Elem b = H.mul(a, s.h);
      if (reached[b] == kUnset) {
        reached[b] = static_cast<Elem>(order_list.size());
        rep[b] = space.reduce(rep[a] + g.act(a, s.v));
        order_list.push_back(b);
      }
    }
  }
  require(order_list.size() == l.size(), ErrorKind::InternalError, "projection of [G,x] differs from [H,x_h]");
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem a : order_list) {
      for (const auto& s : gens) {
        const Elem b = H.mul(a, s.h);
        GFVector diff = rep[a] + g.act(a, s.v) - rep[b];
        if (space.insert(diff)) changed = true;
      }
    }
  }
  RowSpace final_space(p, d);
  auto basis = detail::spin_space(mod->generator_matrices(), final_space, space.rows());
  require(basis.size() == space.rank(), ErrorKind::InternalError, "V-part of [G,x] is not H-invariant");
  out.v_part = Submodule{mod, basis};
  out.lift.assign(H.order(), GFVector(p, d));
  for (Elem a : order_list) out.lift[a] = space.reduce(rep[a]);
  out.order = out.v_part.order() * l.size();
  const BigInt ga_order = g.order() * out.automorphism_order;
  out.quotient_order = ga_order / out.order;
  out.gcd = boost::multiprecision::gcd(out.order, out.quotient_order);
  return out;
}

}  // namespace goodaction
