#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "goodaction/error.hpp"

namespace goodaction {

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// prime -> exponent
inline std::map<std::size_t, unsigned> factorize(std::size_t n) {
  std::map<std::size_t, unsigned> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

/// Number of prime factors counted with multiplicity (big Omega).
inline unsigned big_omega(std::size_t n) {
  unsigned total = 0;
  for (auto [p, e] : factorize(n)) total += e;
  return total;
}

/// Largest divisor of n whose prime factors all satisfy `in`.
template <typename Pred>
std::size_t part_of(std::size_t n, Pred in) {
  std::size_t out = 1;
  for (auto [p, e] : factorize(n))
    if (in(p))
      for (unsigned i = 0; i < e; ++i) out *= p;
  return out;
}

inline bool is_prime_power(std::size_t n) { return n > 1 && factorize(n).size() == 1; }

/// A finite set of primes (sigma, pi(G), ...).
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::size_t> primes) {
    for (auto p : primes) insert(p);
  }
  explicit PrimeSet(const std::vector<std::size_t>& primes) {
    for (auto p : primes) insert(p);
  }
  static PrimeSet of_order(std::size_t n) { return PrimeSet(prime_divisors(n)); }

  void insert(std::size_t p) {
    require(is_prime(p), ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    primes_.insert(p);
  }
  bool contains(std::size_t p) const { return primes_.count(p) != 0; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  /// sigma-part of n
  std::size_t part(std::size_t n) const {
    return part_of(n, [this](std::size_t p) { return contains(p); });
  }
  /// true when every prime divisor of n lies in the set
  bool covers(std::size_t n) const { return part(n) == n; }

  std::vector<PrimeSet> nonempty_subsets() const {
    std::vector<std::size_t> v(primes_.begin(), primes_.end());
    std::vector<PrimeSet> out;
    for (std::size_t bits = 1; bits < (std::size_t{1} << v.size()); ++bits) {
      PrimeSet s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (bits >> i & 1) s.insert(v[i]);
      out.push_back(std::move(s));
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    for (auto it = primes_.begin(); it != primes_.end(); ++it) {
      if (it != primes_.begin()) s += ",";
      s += std::to_string(*it);
    }
    return s + "}";
  }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::set<std::size_t> primes_;
};

}  // namespace goodaction
