#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "biinterval/fourier.hpp"
#include "biinterval/spectra.hpp"
#include "biinterval/verify.hpp"

namespace biinterval {
namespace {

const BiIntervalRegion kHalf3(Rational(1, 2), Rational(3, 2));
const BiIntervalRegion kNonSpectral(Rational(1, 3), Rational(1, 2));

TEST(SplitMix64Test, ReferenceStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(rng.next(), 0x06C45D188009454Full);
}

TEST(SplitMix64Test, UniformStaysInRangeAndHitsEnds) {
  SplitMix64 rng(3);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 5000; ++i) {
    const std::int64_t x = rng.uniform(-3, 4);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 4);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_EQ(rng.uniform(7, 7), 7);
}

TEST(SplitMix64Test, SplitIsDeterministic) {
  SplitMix64 a(17), b(17);
  SplitMix64 ca = a.split(), cb = b.split();
  for (int i = 0; i < 10; ++i) EXPECT_EQ(ca.next(), cb.next());
  EXPECT_NE(ca.next(), a.next());
}

TEST(RandomRegionTest, RespectsBounds) {
  SplitMix64 rng(19);
  for (int i = 0; i < 2000; ++i) {
    const BiIntervalRegion region = random_region(rng, 64, 10);
    EXPECT_LE(region.r().den(), 64);
    EXPECT_LE(region.a(), Rational(10));
    const BiIntervalRegion ii = random_admissible_region(rng, CaseSelector::CaseII);
    EXPECT_TRUE(classify_region(ii).case_ii_n.has_value());
    const BiIntervalRegion i1 = random_admissible_region(rng, CaseSelector::CaseI);
    EXPECT_TRUE(classify_region(i1).case_i);
  }
}

TEST(ScanZerosTest, FindsKnownZeros) {
  const auto cands = scan_zeros(kHalf3, 0.0, 2.0, 1e-3, 1e-6);
  ASSERT_EQ(cands.size(), 4u);
  const double expected[] = {1.0 / 3.0, 1.0, 5.0 / 3.0, 2.0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(cands[i].location, expected[i], 1e-9);
    EXPECT_LT(cands[i].min_modulus, 1e-6);
  }
}

TEST(ScanZerosTest, LowerEndIsExcluded) {
  const auto cands = scan_zeros(kHalf3, 1.0, 2.0, 1e-3, 1e-6);
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_NEAR(cands[0].location, 5.0 / 3.0, 1e-9);
  EXPECT_NEAR(cands[1].location, 2.0, 1e-9);
}

TEST(ScanZerosTest, ZeroOnTheUpperEndIsKept) {
  const BiIntervalRegion region(Rational(1, 2), Rational(31, 4));
  const ZeroScanReport rep = reconcile(region, Rational(0), Rational(10), 1e-3, 1e-6, 1000);
  EXPECT_TRUE(rep.pass());
  ASSERT_FALSE(rep.matched.empty());
  EXPECT_EQ(rep.matched.back().zero, Rational(10));
}

TEST(ScanZerosTest, DegenerateInputsGiveNothing) {
  EXPECT_TRUE(scan_zeros(kHalf3, 2.0, 1.0, 1e-3, 1e-6).empty());
  EXPECT_TRUE(scan_zeros(kHalf3, 0.0, 1.0, 0.0, 1e-6).empty());
}

TEST(ReconcileTest, HalfIntegerRegion) {
  const ZeroScanReport rep = reconcile(kHalf3, Rational(0), Rational(2), 1e-3, 1e-6, 1000);
  EXPECT_TRUE(rep.pass());
  ASSERT_EQ(rep.matched.size(), 4u);
  EXPECT_EQ(rep.matched[0].zero, Rational(1, 3));
  EXPECT_EQ(rep.matched[3].zero, Rational(2));
}

TEST(ReconcileTest, LowDenominatorBoundLeavesCandidatesUnmatched) {
  const ZeroScanReport rep = reconcile(kHalf3, Rational(0), Rational(2), 1e-3, 1e-6, 1);
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(rep.matched.size(), 2u);
  EXPECT_EQ(rep.unmatched_candidates.size(), 2u);
}

TEST(ReconcileProperty, ScanAgreesWithExactZeros) {
  SplitMix64 rng(59);
  for (int i = 0; i < 15; ++i) {
    const BiIntervalRegion region = random_region(rng, 12, 10);
    const ZeroScanReport rep = reconcile(region, Rational(0), Rational(5), 1e-3, 1e-6, 1000);
    EXPECT_TRUE(rep.pass()) << "r=" << region.r() << " a=" << region.a() << " unmatched candidates "
                            << rep.unmatched_candidates.size() << " unmatched predictions "
                            << rep.unmatched_predictions.size();
    for (const ZeroMatch& m : rep.matched) EXPECT_NEAR(m.candidate.location, m.zero.to_double(), 1e-9);
  }
}

TEST(GreedyFamilyTest, NonSpectralNegativeControl) {
  const auto family = greedy_orthogonal_family(kNonSpectral, Rational(50));
  ASSERT_EQ(family.size(), 33u);
  for (const Rational& f : family) EXPECT_TRUE((f / 3).is_integer());
  EXPECT_TRUE(difference_set_in_zeros(kNonSpectral, family).pass);
  const ParsevalReport rep = parseval_partial(kNonSpectral, family, Rational(0));
  EXPECT_NEAR(rep.partial_sum, 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(rep.defect, 2.0 / 9.0, 1e-15);
}

TEST(GreedyFamilyTest, SpectralRegionRecoversAnOrthogonalFamily) {
  const auto family = greedy_orthogonal_family(kHalf3, Rational(6));
  EXPECT_TRUE(difference_set_in_zeros(kHalf3, family).pass);
  EXPECT_EQ(family.front(), Rational(-6));
  EXPECT_EQ(family.back(), Rational(6));
}

TEST(CheckRegionTest, Examples) {
  const RegionCheck ok = check_region(BiIntervalRegion(Rational(1, 2), Rational(5, 2)));
  EXPECT_TRUE(ok.equivalent);
  EXPECT_TRUE(ok.admissible);
  EXPECT_TRUE(ok.pipeline_ok);
  EXPECT_TRUE(ok.failure.empty());

  const RegionCheck skip = check_region(BiIntervalRegion(Rational(1, 4), Rational(3, 8)));
  EXPECT_TRUE(skip.equivalent);
  EXPECT_FALSE(skip.admissible);
  EXPECT_TRUE(skip.failure.empty());
}

TEST(DriverTest, DeterministicAndClean) {
  const DriverSummary a = random_region_driver(300, 12345);
  const DriverSummary b = random_region_driver(300, 12345);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.count, 300u);
  EXPECT_EQ(a.admissible + a.skipped, a.count);
  EXPECT_TRUE(a.all_passed()) << (a.failures.empty() ? "" : a.failures.front());
  EXPECT_GT(a.admissible, 0u);
}

}  // namespace
}  // namespace biinterval
