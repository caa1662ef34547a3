#pragma once

// Exact elements of Q(zeta_n): coefficients over the power basis
// 1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic polynomial,
// stored as an integer numerator vector over one positive denominator.

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "goodaction/error.hpp"

namespace goodaction {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

// Coefficients of Phi_n, lowest degree first.
inline const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
  thread_local std::map<unsigned, std::vector<BigInt>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<BigInt> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<BigInt> q(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const BigInt c = poly[i];  // divisor is monic
      q[i - dd] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
    }
    poly = std::move(q);
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace detail

inline unsigned euler_phi(unsigned n) { return static_cast<unsigned>(detail::cyclotomic_polynomial(n).size() - 1); }

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(unsigned conductor) : n_(conductor), num_(euler_phi(conductor), 0), den_(1) {
    require(conductor >= 1, ErrorKind::InvalidArgument, "conductor must be positive");
  }

  static Cyclotomic zero(unsigned n = 1) { return Cyclotomic(n); }
  static Cyclotomic integer(long long k, unsigned n = 1) {
    Cyclotomic c(n);
    c.num_[0] = k;
    return c;
  }
  static Cyclotomic one(unsigned n = 1) { return integer(1, n); }
  static Cyclotomic rational(const BigRational& q, unsigned n = 1) {
    Cyclotomic c(n);
    c.num_[0] = boost::multiprecision::numerator(q);
    c.den_ = boost::multiprecision::denominator(q);
    c.normalize();
    return c;
  }
  /// zeta_n^k
  static Cyclotomic zeta(unsigned n, long long k = 1) {
    std::vector<BigInt> coeffs(n, 0);
    coeffs[static_cast<std::size_t>(((k % static_cast<long long>(n)) + n) % n)] = 1;
    return from_power_coefficients(n, std::move(coeffs));
  }
  /// sum_i coeffs[i] z^i / den, for any number of coefficients
  static Cyclotomic from_power_coefficients(unsigned n, std::vector<BigInt> coeffs, BigInt den = 1) {
    require(den != 0, ErrorKind::InvalidArgument, "zero denominator");
    Cyclotomic c(n);
    c.num_ = reduce(n, std::move(coeffs));
    c.den_ = std::move(den);
    c.normalize();
    return c;
  }

  unsigned conductor() const noexcept { return n_; }
  const std::vector<BigInt>& numerators() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const {
    for (const auto& c : num_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) return false;
    return true;
  }
  BigRational rational_value() const {
    require(is_rational(), ErrorKind::InvalidArgument, "cyclotomic value is not rational");
    return BigRational(num_[0], den_);
  }

  /// The same number written at conductor m (a multiple of n).
  Cyclotomic embed(unsigned m) const {
    require(m % n_ == 0, ErrorKind::InvalidArgument, "embedding conductor must be a multiple");
    if (m == n_) return *this;
    const unsigned step = m / n_;
    std::vector<BigInt> coeffs(m, 0);
    for (std::size_t i = 0; i < num_.size(); ++i) coeffs[i * step] = num_[i];
    return from_power_coefficients(m, std::move(coeffs), den_);
  }

  /// Galois automorphism z -> z^k, gcd(k, n) = 1.
  Cyclotomic galois(long long k) const {
    const long long n = n_;
    k = ((k % n) + n) % n;
    require(std::gcd(k, n) == 1 || n == 1, ErrorKind::InvalidArgument, "Galois exponent must be a unit");
    std::vector<BigInt> coeffs(n_, 0);
    for (std::size_t i = 0; i < num_.size(); ++i) coeffs[static_cast<std::size_t>(static_cast<long long>(i) * k % n)] += num_[i];
    return from_power_coefficients(n_, std::move(coeffs), den_);
  }
  /// Complex conjugate.
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic inverse() const {
    require(!is_zero(), ErrorKind::InvalidArgument, "inverse of zero");
    // x^-1 = (product of the other Galois conjugates) / norm(x)
    Cyclotomic prod = one(n_);
    for (unsigned k = 2; k < n_; ++k)
      if (std::gcd(k, n_) == 1) prod = prod * galois(k);
    const Cyclotomic norm = prod * *this;
    require(norm.is_rational(), ErrorKind::InternalError, "field norm is not rational");
    return prod * rational(BigRational(1) / norm.rational_value(), n_);
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
      const unsigned m = std::lcm(a.n_, b.n_);
      return a.embed(m) + b.embed(m);
    }
    Cyclotomic r(a.n_);
    r.den_ = a.den_ * b.den_;
    for (std::size_t i = 0; i < r.num_.size(); ++i) r.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    r.normalize();
    return r;
  }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
      const unsigned m = std::lcm(a.n_, b.n_);
      return a.embed(m) * b.embed(m);
    }
    const std::size_t k = a.num_.size();
    std::vector<BigInt> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (b.num_[j] != 0) prod[i + j] += a.num_[i] * b.num_[j];
    }
    return from_power_coefficients(a.n_, std::move(prod), a.den_ * b.den_);
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
      const unsigned m = std::lcm(a.n_, b.n_);
      return a.embed(m) == b.embed(m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// e.g. "1 + 2*z21^7 - z21^14", or "3/2"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      const BigInt& c = num_[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (i == 0) {
        s += mag.str();
      } else {
        if (mag != 1) s += mag.str() + "*";
        s += "z" + std::to_string(n_) + (i == 1 ? "" : "^" + std::to_string(i));
      }
    }
    if (s.empty()) s = "0";
    if (den_ != 1) s = "(" + s + ")/" + den_.str();
    return s;
  }

 private:
  static std::vector<BigInt> reduce(unsigned n, std::vector<BigInt> a) {
    const auto& phi = detail::cyclotomic_polynomial(n);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = a.size(); i-- > d;) {
      const BigInt c = a[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * phi[j];
    }
    a.resize(d, 0);
    return a;
  }
  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    BigInt g = den_;
    for (const auto& c : num_)
      if (c != 0) g = boost::multiprecision::gcd(g, c);
    if (is_zero()) g = den_;
    if (g != 1) {
      den_ /= g;
      for (auto& c : num_) c /= g;
    }
  }

  unsigned n_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

}  // namespace goodaction
