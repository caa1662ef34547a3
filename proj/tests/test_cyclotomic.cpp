#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "goodaction/cyclotomic.hpp"

using namespace goodaction;

namespace {

std::complex<double> numeric(const Cyclotomic& c) {
  const double pi = std::acos(-1.0);
  std::complex<double> s = 0;
  const auto& num = c.numerators();
  for (std::size_t i = 0; i < num.size(); ++i)
    s += num[i].convert_to<double>() * std::polar(1.0, 2 * pi * static_cast<double>(i) / c.conductor());
  return s / c.denominator().convert_to<double>();
}

Cyclotomic random_element(unsigned n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<BigInt> coeffs(n);
  for (auto& c : coeffs) c = d(rng);
  return Cyclotomic::from_power_coefficients(n, coeffs, 1 + rng() % 3);
}

}  // namespace

TEST(Cyclotomic, RootsOfUnity) {
  for (unsigned n : {1u, 2u, 3u, 4u, 6u, 7u, 9u, 12u, 21u}) {
    Cyclotomic p = Cyclotomic::one(n);
    for (unsigned k = 0; k < n; ++k) p *= Cyclotomic::zeta(n);
    EXPECT_EQ(p, Cyclotomic::one(n)) << n;
    Cyclotomic s = Cyclotomic::zero(n);
    for (unsigned k = 0; k < n; ++k) s += Cyclotomic::zeta(n, k);
    EXPECT_TRUE(s.is_zero() == (n > 1)) << n;
  }
}

TEST(Cyclotomic, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(9), 6u);
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(euler_phi(21), 12u);
}

TEST(Cyclotomic, FieldOperationsAgreeNumerically) {
  std::mt19937 rng(7);
  for (unsigned n : {3u, 5u, 8u, 12u, 15u}) {
    for (int t = 0; t < 20; ++t) {
      auto a = random_element(n, rng), b = random_element(n, rng);
      EXPECT_LT(std::abs(numeric(a + b) - (numeric(a) + numeric(b))), 1e-9);
      EXPECT_LT(std::abs(numeric(a * b) - numeric(a) * numeric(b)), 1e-9);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), Cyclotomic::one(n));
        EXPECT_LT(std::abs(numeric(b / a) - numeric(b) / numeric(a)), 1e-7);
      }
    }
  }
}

TEST(Cyclotomic, MixedConductorsEmbed) {
  const auto a = Cyclotomic::zeta(3), b = Cyclotomic::zeta(4);
  const auto c = a * b;
  EXPECT_EQ(c.conductor() % 12, 0u);
  EXPECT_EQ(c, Cyclotomic::zeta(12, 7));
  EXPECT_EQ(Cyclotomic::zeta(3).embed(6), Cyclotomic::zeta(6, 2));
}

TEST(Cyclotomic, GaloisAndRationality) {
  const auto z = Cyclotomic::zeta(7);
  Cyclotomic orbit = Cyclotomic::zero(7);
  for (long long k : {1, 2, 4}) orbit += z.galois(k);
  const auto other = z.galois(3) + z.galois(5) + z.galois(6);
  EXPECT_EQ(orbit + other, Cyclotomic::integer(-1, 7));
  EXPECT_FALSE(orbit.is_rational());
  EXPECT_EQ((orbit * other).rational_value(), BigRational(2));
  EXPECT_THROW(Cyclotomic::zero(5).inverse(), Error);
}
