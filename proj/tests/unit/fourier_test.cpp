#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "biinterval/fourier.hpp"
#include "biinterval/verify.hpp"
#include "test_support.hpp"

namespace biinterval {
namespace {

const BiIntervalRegion kCaseI(Rational(1, 3), Rational(4, 3));
const BiIntervalRegion kHalf3(Rational(1, 2), Rational(3, 2));
const BiIntervalRegion kNonSpectral(Rational(1, 3), Rational(1, 2));

TEST(FtIndicatorTest, ValueAtZeroIsMeasure) {
  EXPECT_EQ(ft_indicator(kCaseI, 0.0), std::complex<double>(1.0));
  EXPECT_EQ(ft_indicator(kNonSpectral, Rational(0)), std::complex<double>(1.0));
}

TEST(FtIndicatorTest, ClosedFormExamples) {
  EXPECT_LT(std::abs(ft_indicator(kCaseI, 1.0)), 1e-15);
  EXPECT_LT(std::abs(ft_indicator(kCaseI, Rational(1))), 1e-15);
  // numerator e^{2 pi i/3} + e^{pi i/3} = i sqrt(3)
  const double expected = std::sqrt(3.0) / (2.0 * std::numbers::pi);
  EXPECT_NEAR(std::abs(ft_indicator(kNonSpectral, 1.0)), expected, 1e-15);
  EXPECT_NEAR(expected, 0.27566444771089602, 1e-15);
}

TEST(FtIndicatorTest, AgreesWithQuadrature) {
  // Reference values from 30-digit quadrature of the defining integral.
  const auto v1 = ft_indicator(kNonSpectral, 0.37);
  EXPECT_NEAR(v1.real(), 0.0852509181683394341762978744326, 1e-14);
  EXPECT_NEAR(v1.imag(), 0.684758258242567201610491082893, 1e-14);
  const BiIntervalRegion other(Rational(2, 7), Rational(5, 3));
  const auto v2 = ft_indicator(other, -2.25);
  EXPECT_NEAR(v2.real(), 0.0707355302630645936750594503876, 1e-14);
  EXPECT_NEAR(v2.imag(), -0.15894129375924577926899637317, 1e-14);

  SplitMix64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const BiIntervalRegion region = random_region(rng, 20, 5);
    const double lambda = double(rng.uniform(-40000, 40000)) / 1000.0;
    EXPECT_LT(std::abs(ft_indicator(region, lambda) - testing::quad_indicator(region, lambda)), 1e-11)
        << "lambda=" << lambda;
  }
}

TEST(FtIndicatorTest, SmallFrequencyBranchIsContinuous) {
  const auto tiny = ft_indicator(kNonSpectral, 1e-9);
  EXPECT_NEAR(tiny.real(), 0.999999999999999990130395598911, 1e-15);
  EXPECT_NEAR(tiny.imag(), 0.00000000383972435438752505060283411321, 1e-18);
  const auto below = ft_indicator(kNonSpectral, 0.999e-8);
  const auto above = ft_indicator(kNonSpectral, 1.001e-8);
  EXPECT_LT(std::abs(below - above), 1e-9);
}

TEST(FtIndicatorTest, DerivativeMatchesFiniteDifference) {
  SplitMix64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const BiIntervalRegion region = random_region(rng, 20, 5);
    const double lambda = double(rng.uniform(-10000, 10000)) / 1000.0;
    const double h = 1e-6;
    const auto fd = (ft_indicator(region, lambda + h) - ft_indicator(region, lambda - h)) / (2 * h);
    EXPECT_LT(std::abs(ft_indicator_derivative(region, lambda) - fd), 1e-6) << lambda;
  }
}

TEST(FtIndicatorProperty, ConjugateSymmetry) {
  SplitMix64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const BiIntervalRegion region = random_region(rng, 64);
    const double lambda = double(rng.uniform(-100000, 100000)) / 977.0;
    EXPECT_LT(std::abs(ft_indicator(region, -lambda) - std::conj(ft_indicator(region, lambda))), 1e-15);
  }
}

TEST(ClassifyFrequencyTest, Examples) {
  const ZeroClass z1 = classify_frequency(kHalf3, Rational(1, 3));
  EXPECT_EQ(z1, (ZeroClass{true, false, false, true}));

  const ZeroClass z23 = classify_frequency(kCaseI, Rational(3));
  EXPECT_EQ(z23, (ZeroClass{false, true, true, true}));

  const ZeroClass none = classify_frequency(kNonSpectral, Rational(1));
  EXPECT_EQ(none, ZeroClass{});

  const ZeroClass origin = classify_frequency(kNonSpectral, Rational(0));
  EXPECT_EQ(origin, (ZeroClass{false, false, false, true}));
}

TEST(ClassifyFrequencyProperty, SoundAgainstClosedForm) {
  SplitMix64 rng(11);
  int zeros = 0;
  for (int i = 0; i < 200; ++i) {
    const BiIntervalRegion region = random_region(rng, 12, 5);
    for (const Rational& z : enumerate_zeros(region, Rational(-10), Rational(10))) {
      ++zeros;
      EXPECT_LT(std::abs(ft_indicator(region, z.to_double())), 1e-12) << z;
    }
  }
  EXPECT_GT(zeros, 1000);
}

TEST(ClassifyFrequencyProperty, NonZerosHaveVisibleModulus) {
  // The converse: rationals not flagged must not be numerical zeros.
  SplitMix64 rng(12);
  for (int i = 0; i < 3000; ++i) {
    const BiIntervalRegion region = random_region(rng, 12, 5);
    const Rational lambda = testing::random_rational(rng, -8, 8, 24);
    if (lambda.is_zero() || classify_frequency(region, lambda).is_zero) continue;
    EXPECT_GT(std::abs(ft_indicator(region, lambda)), 1e-9) << lambda;
  }
}

TEST(ClassifyFrequencyProperty, Z2AndZ3AreAdditiveSubgroups) {
  SplitMix64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const BiIntervalRegion region = random_region(rng, 16, 6);
    std::vector<Rational> z2, z3;
    for (std::int64_t m = -60; m <= 60; ++m) {
      const ZeroClass z = classify_frequency(region, Rational(m));
      if (m != 0 && z.in_z2) z2.emplace_back(m);
      if (m != 0 && z.in_z3) z3.emplace_back(m);
    }
    for (std::size_t k = 0; k + 1 < z2.size(); ++k) {
      const Rational x = z2[k], y = z2[std::size_t(rng.uniform(0, std::int64_t(z2.size()) - 1))];
      EXPECT_TRUE(classify_frequency(region, -x).in_z2);
      if (x + y != 0) EXPECT_TRUE(classify_frequency(region, x + y).in_z2);
    }
    for (std::size_t k = 0; k + 1 < z3.size(); ++k) {
      const Rational x = z3[k], y = z3[std::size_t(rng.uniform(0, std::int64_t(z3.size()) - 1))];
      EXPECT_TRUE(classify_frequency(region, -x).in_z3);
      if (x + y != 0) EXPECT_TRUE(classify_frequency(region, x + y).in_z3);
    }
  }
}

TEST(EnumerateZerosTest, MatchesBruteForceOverSmallDenominators) {
  SplitMix64 rng(14);
  for (int i = 0; i < 40; ++i) {
    const BiIntervalRegion region = random_region(rng, 8, 4);
    // Every zero has denominator dividing 2 * num(a) (see the Z1 form), so
    // brute force over denominators up to 2 * num(a) is exhaustive.
    std::set<Rational> brute;
    const std::int64_t max_den = 2 * region.a().num();
    for (std::int64_t q = 1; q <= max_den; ++q) {
      for (std::int64_t p = -5 * q; p <= 5 * q; ++p) {
        const Rational lambda(p, q);
        if (!lambda.is_zero() && classify_frequency(region, lambda).is_zero) brute.insert(lambda);
      }
    }
    const auto fast = enumerate_zeros(region, Rational(-5), Rational(5));
    EXPECT_EQ(std::set<Rational>(fast.begin(), fast.end()), brute)
        << "r=" << region.r() << " a=" << region.a();
  }
}

TEST(EnumerateZerosTest, KnownSets) {
  const auto z = enumerate_zeros(kHalf3, Rational(0), Rational(4));
  const std::vector<Rational> expected = {Rational(1, 3), 1, Rational(5, 3), 2, Rational(7, 3), 3, Rational(11, 3), 4};
  EXPECT_EQ(z, expected);
  EXPECT_EQ(enumerate_zeros(kCaseI, Rational(0), Rational(3)), (std::vector<Rational>{1, 2, 3}));
  // (r=1/3, a=1/2): the zero set is 3Z.
  EXPECT_EQ(enumerate_zeros(kNonSpectral, Rational(-7), Rational(7)), (std::vector<Rational>{-6, -3, 3, 6}));
}

TEST(DifferenceSetTest, Examples) {
  const std::vector<Rational> lattice = {0, 1, 2, 5};
  EXPECT_TRUE(difference_set_in_zeros(kCaseI, lattice).pass);

  const std::vector<Rational> half = {0, Rational(1, 3), 2, Rational(7, 3)};
  EXPECT_TRUE(difference_set_in_zeros(kHalf3, half).pass);

  const std::vector<Rational> bad = {0, 1};
  const auto rep = difference_set_in_zeros(kNonSpectral, bad);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.first_failure);
  EXPECT_EQ(rep.first_failure->first, Rational(1));
  EXPECT_EQ(rep.first_failure->second, Rational(0));

  const std::vector<Rational> repeated = {0, 1, 1};
  EXPECT_THROW(difference_set_in_zeros(kCaseI, repeated), Error);
}

}  // namespace
}  // namespace biinterval
