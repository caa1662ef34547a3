#pragma once

// Finite groups stored as complete Cayley tables, plus the Subgroup and
// Homomorphism value types every other header computes with.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "goodaction/error.hpp"

namespace goodaction {

using Elem = std::uint32_t;
using Mask = boost::dynamic_bitset<std::uint64_t>;

inline constexpr Elem kIdentity = 0;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group given by its multiplication table. Element 0 is the
/// identity. Inverses, element orders and conjugacy classes are computed
/// once at construction; the object is immutable afterwards.
class Group {
 public:
  /// Builds from an arbitrary Latin-square table. The identity is located
  /// and relabelled to index 0 (other elements keep their relative order).
  static GroupPtr from_table(std::vector<std::vector<Elem>> table, std::string label = {},
                             std::vector<Elem> generators = {});

  /// Builds the group whose elements are `elements` under `mul`. The identity
  /// must be among them; it is moved to index 0.
  template <typename T, typename Mul>
  static GroupPtr from_elements(const std::vector<T>& elements, Mul mul, std::string label = {});

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  std::size_t element_order(Elem a) const noexcept { return orders_[a]; }
  Elem pow(Elem a, long long k) const noexcept;
  /// g^-1 h g
  Elem conj(Elem h, Elem g) const noexcept { return mul(inv(g), mul(h, g)); }
  /// [a,b] = a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const std::vector<std::vector<Elem>>& classes() const noexcept { return classes_; }
  std::size_t class_of(Elem g) const noexcept { return class_index_[g]; }
  bool is_abelian() const noexcept { return abelian_; }

  Mask empty_mask() const { return Mask(n_); }
  Mask full_mask() const {
    Mask m(n_);
    m.set();
    return m;
  }

  /// Verifies the table invariants: identity row/column, Latin square,
  /// inverses, and associativity (exhaustive for order <= 200, otherwise on
  /// a seeded random sample).
  void validate(std::uint64_t seed = 0x5eed) const;

 private:
  Group(std::size_t n, std::vector<Elem> table, std::string label);
  void fill_caches(std::vector<Elem> generators);

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<Elem> generators_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::size_t> class_index_;
  std::string label_;
  bool abelian_ = true;
};

/// A subgroup of a parent Group, stored as a membership mask. A short
/// generating set is kept alongside.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, Mask members, std::vector<Elem> generators);

  const GroupPtr& parent() const noexcept { return parent_; }
  const Group& group() const noexcept { return *parent_; }
  const Mask& mask() const noexcept { return members_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(Elem g) const { return members_.test(g); }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  std::vector<Elem> elements() const;

  bool is_trivial() const noexcept { return size_ == 1; }
  bool is_whole() const noexcept { return parent_ && size_ == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  Mask members_;
  std::vector<Elem> generators_;
  std::size_t size_ = 0;
};

/// Canonical order for subgroup lists: by size, then lexicographically by the
/// sorted list of member indices.
inline bool canonical_less(const Mask& a, const Mask& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  for (auto i = a.find_first(), j = b.find_first(); i != Mask::npos; i = a.find_next(i), j = b.find_next(j)) {
    if (i != j) return i < j;
  }
  return false;
}

inline bool canonical_less(const Subgroup& a, const Subgroup& b) { return canonical_less(a.mask(), b.mask()); }

/// A map between groups stored as the full image array.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(GroupPtr source, GroupPtr target, std::vector<Elem> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    require(images_.size() == source_->order(), ErrorKind::InvalidArgument, "image array size mismatch");
  }

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  Elem operator()(Elem g) const { return images_[g]; }
  const std::vector<Elem>& images() const noexcept { return images_; }

  /// phi(xy) = phi(x)phi(y) on all pairs.
  bool is_homomorphism() const;
  bool is_bijective() const;
  Subgroup kernel() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> images_;
};

// ---------------------------------------------------------------------------
// Closure

/// Smallest subgroup containing `seed`.
Subgroup closure(const GroupPtr& g, std::span<const Elem> seed);
inline Subgroup closure(const GroupPtr& g, std::initializer_list<Elem> seed) {
  return closure(g, std::span<const Elem>(seed.begin(), seed.size()));
}
/// Smallest subgroup containing `h` and `extra`.
Subgroup closure(const Subgroup& h, std::span<const Elem> extra);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
/// Wraps a mask already known to be a subgroup (checked).
Subgroup subgroup_from_mask(const GroupPtr& g, const Mask& mask);

// ---------------------------------------------------------------------------
// Implementation

inline Group::Group(std::size_t n, std::vector<Elem> table, std::string label)
    : n_(n), table_(std::move(table)), label_(std::move(label)) {}

inline GroupPtr Group::from_table(std::vector<std::vector<Elem>> table, std::string label,
                                  std::vector<Elem> generators) {
  const std::size_t n = table.size();
  require(n >= 1, ErrorKind::InvalidArgument, "empty multiplication table");
  for (const auto& row : table) {
    require(row.size() == n, ErrorKind::InvalidArgument, "table is not square");
    for (Elem e : row) require(e < n, ErrorKind::IndexOutOfRange, "table entry out of range");
  }
  Elem id = static_cast<Elem>(n);
  for (Elem e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) id = e;
  }
  require(id < n, ErrorKind::InvalidArgument, "table has no identity");
  // relabel: id -> 0, elements before id shift up by one
  std::vector<Elem> to_new(n), to_old(n);
  {
    Elem next = 1;
    for (Elem e = 0; e < n; ++e) to_new[e] = (e == id) ? 0 : next++;
    for (Elem e = 0; e < n; ++e) to_old[to_new[e]] = e;
  }
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[a * n + b] = to_new[table[to_old[a]][to_old[b]]];
  for (auto& gen : generators) {
    require(gen < n, ErrorKind::IndexOutOfRange, "generator out of range");
    gen = to_new[gen];
  }
  auto* raw = new Group(n, std::move(flat), std::move(label));
  GroupPtr ptr(raw);
  raw->fill_caches(std::move(generators));
  return ptr;
}

template <typename T, typename Mul>
GroupPtr Group::from_elements(const std::vector<T>& elements, Mul mul, std::string label) {
  std::map<T, Elem> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto [it, fresh] = index.emplace(elements[i], static_cast<Elem>(i));
    require(fresh, ErrorKind::InvalidArgument, "duplicate element");
  }
  std::vector<std::vector<Elem>> table(elements.size(), std::vector<Elem>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto it = index.find(mul(elements[a], elements[b]));
      require(it != index.end(), ErrorKind::InvalidArgument, "element set not closed under multiplication");
      table[a][b] = it->second;
    }
  }
  return from_table(std::move(table), std::move(label));
}

inline Elem Group::pow(Elem a, long long k) const noexcept {
  const auto ord = static_cast<long long>(orders_[a]);
  k %= ord;
  if (k < 0) k += ord;
  Elem r = kIdentity, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

inline void Group::fill_caches(std::vector<Elem> generators) {
  inverse_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    bool found = false;
    for (Elem b = 0; b < n_; ++b) {
      if (mul(a, b) == kIdentity) {
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    require(found, ErrorKind::InvalidArgument, "element without inverse");
  }
  orders_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    std::size_t k = 1;
    Elem x = a;
    while (x != kIdentity) {
      x = mul(x, a);
      ++k;
      require(k <= n_, ErrorKind::InvalidArgument, "element of infinite order in table");
    }
    orders_[a] = k;
  }
  for (Elem a = 0; a < n_ && abelian_; ++a)
    for (Elem b = a + 1; b < n_ && abelian_; ++b) abelian_ = mul(a, b) == mul(b, a);

  class_index_.assign(n_, n_);
  for (Elem a = 0; a < n_; ++a) {
    if (class_index_[a] != n_) continue;
    std::vector<Elem> cls;
    const std::size_t idx = classes_.size();
    for (Elem g = 0; g < n_; ++g) {
      Elem c = conj(a, g);
      if (class_index_[c] == n_) {
        class_index_[c] = idx;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }

  if (generators.empty() && n_ > 1) {
    // Greedy: repeatedly add the highest-order element outside the current closure.
    std::vector<Elem> by_order(n_);
    std::iota(by_order.begin(), by_order.end(), Elem{0});
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Elem x, Elem y) { return orders_[x] > orders_[y]; });
    Mask current(n_);
    current.set(kIdentity);
    std::vector<Elem> elems{kIdentity};
    for (Elem cand : by_order) {
      if (current.test(cand)) continue;
      generators.push_back(cand);
      // re-close
      elems.assign(1, kIdentity);
      current.reset();
      current.set(kIdentity);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (Elem s : generators) {
          Elem y = mul(elems[i], s);
          if (!current.test(y)) {
            current.set(y);
            elems.push_back(y);
          }
        }
      }
      if (elems.size() == n_) break;
    }
  }
  generators_ = std::move(generators);
}

inline void Group::validate(std::uint64_t seed) const {
  for (Elem x = 0; x < n_; ++x)
    require(mul(kIdentity, x) == x && mul(x, kIdentity) == x, ErrorKind::InternalError, "identity row broken");
  for (Elem a = 0; a < n_; ++a) {
    Mask row(n_), col(n_);
    for (Elem b = 0; b < n_; ++b) {
      row.set(mul(a, b));
      col.set(mul(b, a));
    }
    require(row.all() && col.all(), ErrorKind::InternalError, "table is not a Latin square");
    require(mul(a, inv(a)) == kIdentity, ErrorKind::InternalError, "inverse table broken");
    require(n_ % orders_[a] == 0, ErrorKind::InternalError, "element order does not divide group order");
  }
  if (n_ <= 200) {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        for (Elem c = 0; c < n_; ++c)
          require(mul(mul(a, b), c) == mul(a, mul(b, c)), ErrorKind::InternalError, "not associative");
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n_ - 1));
    for (int i = 0; i < 200000; ++i) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      require(mul(mul(a, b), c) == mul(a, mul(b, c)), ErrorKind::InternalError, "not associative");
    }
  }
}

inline Subgroup::Subgroup(GroupPtr parent, Mask members, std::vector<Elem> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  size_ = members_.count();
}

inline std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  out.reserve(size_);
  for (auto i = members_.find_first(); i != Mask::npos; i = members_.find_next(i)) out.push_back(static_cast<Elem>(i));
  return out;
}

inline bool Homomorphism::is_homomorphism() const {
  const auto n = source_->order();
  if (images_[kIdentity] != kIdentity) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (images_[source_->mul(x, y)] != target_->mul(images_[x], images_[y])) return false;
  return true;
}

inline bool Homomorphism::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  Mask seen(target_->order());
  for (Elem e : images_) {
    if (seen.test(e)) return false;
    seen.set(e);
  }
  return true;
}

inline Subgroup Homomorphism::kernel() const {
  Mask m = source_->empty_mask();
  std::vector<Elem> gens;
  for (Elem x = 0; x < source_->order(); ++x)
    if (images_[x] == kIdentity) m.set(x);
  return subgroup_from_mask(source_, m);
}

namespace detail {

// BFS closure starting from the elements already in `mask`/`elems`, closing
// under right multiplication by `gens`.
inline void close_in_place(const Group& g, Mask& mask, std::vector<Elem>& elems, std::span<const Elem> gens) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(elems[i], s);
      if (!mask.test(y)) {
        mask.set(y);
        elems.push_back(y);
      }
    }
  }
}

}  // namespace detail

inline Subgroup closure(const GroupPtr& g, std::span<const Elem> seed) {
  Mask mask = g->empty_mask();
  mask.set(kIdentity);
  std::vector<Elem> elems{kIdentity};
  std::vector<Elem> gens;
  for (Elem s : seed) {
    require(s < g->order(), ErrorKind::IndexOutOfRange, "seed element index out of range");
    if (mask.test(s)) continue;
    gens.push_back(s);
    // rescanning from the start multiplies old elements by the new generator too
    detail::close_in_place(*g, mask, elems, gens);
  }
  return Subgroup(g, std::move(mask), std::move(gens));
}

inline Subgroup closure(const Subgroup& h, std::span<const Elem> extra) {
  std::vector<Elem> seed = h.generators();
  seed.insert(seed.end(), extra.begin(), extra.end());
  return closure(h.parent(), seed);
}

inline Subgroup trivial_subgroup(const GroupPtr& g) {
  Mask m = g->empty_mask();
  m.set(kIdentity);
  return Subgroup(g, std::move(m), {});
}

inline Subgroup whole_group(const GroupPtr& g) { return Subgroup(g, g->full_mask(), g->generators()); }

inline Subgroup subgroup_from_mask(const GroupPtr& g, const Mask& mask) {
  require(mask.size() == g->order(), ErrorKind::InvalidArgument, "mask size mismatch");
  require(mask.test(kIdentity), ErrorKind::NotASubgroup, "mask does not contain the identity");
  // Greedy generating set, then verify the closure reproduces the mask.
  Mask reached = g->empty_mask();
  reached.set(kIdentity);
  std::vector<Elem> elems{kIdentity};
  std::vector<Elem> gens;
  for (auto i = mask.find_first(); i != Mask::npos; i = mask.find_next(i)) {
    const Elem x = static_cast<Elem>(i);
    if (reached.test(x)) continue;
    gens.push_back(x);
    elems.assign(1, kIdentity);
    reached.reset();
    reached.set(kIdentity);
    detail::close_in_place(*g, reached, elems, gens);
    if (!reached.is_subset_of(mask)) fail(ErrorKind::NotASubgroup, "mask is not closed under multiplication");
  }
  return Subgroup(g, mask, std::move(gens));
}

}  // namespace goodaction
