#include "biinterval/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "biinterval/fourier.hpp"
#include "biinterval/spectra.hpp"
#include "biinterval/tiling.hpp"

namespace biinterval {

namespace {

constexpr int kBisectionSteps = 40;

/// d/dlambda |FT(lambda)|^2 = 2 Re(conj(FT) FT').
double modulus_slope(const BiIntervalRegion& region, double x) {
  return 2.0 * std::real(std::conj(ft_indicator(region, x)) * ft_indicator_derivative(region, x));
}

constexpr double kLocationTolerance = 1e-9;

double refine_minimum(const BiIntervalRegion& region, double lo, double hi, double fallback) {
  if (modulus_slope(region, lo) > 0.0 || modulus_slope(region, hi) < 0.0) return fallback;
  for (int i = 0; i < kBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (modulus_slope(region, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string describe(const BiIntervalRegion& region) {
  return "(r=" + region.r().str() + ", a=" + region.a().str() + ")";
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = max() - max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

BiIntervalRegion random_region(SplitMix64& rng, std::int64_t max_denominator, std::int64_t max_a) {
  const std::int64_t q = rng.uniform(2, max_denominator);
  const std::int64_t u = rng.uniform(1, q / 2);
  const std::int64_t v = rng.uniform(u, max_a * q);
  return BiIntervalRegion(Rational(u, q), Rational(v, q));
}

BiIntervalRegion random_admissible_region(SplitMix64& rng, CaseSelector which, std::int64_t max_denominator,
                                          std::int64_t max_a) {
  if (which == CaseSelector::CaseII) return BiIntervalRegion(Rational(1, 2), Rational(rng.uniform(1, 2 * max_a), 2));
  const std::int64_t q = rng.uniform(2, max_denominator);
  const Rational r(rng.uniform(1, q / 2), q);
  return BiIntervalRegion(r, r + rng.uniform(0, max_a - 1));
}

std::vector<ZeroCandidate> scan_zeros(const BiIntervalRegion& region, double lo, double hi, double step,
                                      double threshold) {
  std::vector<ZeroCandidate> out;
  if (!(step > 0.0) || !(threshold > 0.0) || !(hi > lo)) return out;

  const auto n = static_cast<std::int64_t>(std::ceil((hi - lo) / step));
  auto at = [&](std::int64_t i) { return lo + double(i) * step; };
  // Modulus on i = -1 .. n + 1 so that both window ends can be minima.
  std::vector<double> mod(std::size_t(n + 3));
  for (std::int64_t i = -1; i <= n + 1; ++i) mod[std::size_t(i + 1)] = std::abs(ft_indicator(region, at(i)));

  for (std::int64_t i = 0; i <= n; ++i) {
    const double prev = mod[std::size_t(i)];
    const double here = mod[std::size_t(i + 1)];
    const double next = mod[std::size_t(i + 2)];
    if (!(here < prev && here <= next)) continue;
    const double x = refine_minimum(region, at(i - 1), at(i + 1), at(i));
    const double m = std::abs(ft_indicator(region, x));
    if (m >= threshold || x <= lo + kLocationTolerance || x > hi + kLocationTolerance) continue;
    if (!out.empty() && std::abs(out.back().location - x) < kLocationTolerance) {
      if (m < out.back().min_modulus) out.back() = {x, m};
      continue;
    }
    out.push_back({x, m});
  }
  return out;
}

ZeroScanReport reconcile(const BiIntervalRegion& region, const Rational& lo, const Rational& hi, double step,
                         double threshold, std::int64_t denominator_bound) {
  ZeroScanReport rep;
  rep.lo = lo.to_double();
  rep.hi = hi.to_double();
  rep.step = step;
  if (!(lo < hi)) return rep;

  rep.candidates = scan_zeros(region, rep.lo, rep.hi, step, threshold);
  std::vector<bool> used(rep.candidates.size(), false);
  for (const Rational& z : enumerate_zeros(region, lo, hi)) {
    if (z == lo || z.den() > denominator_bound) continue;
    const double zd = z.to_double();
    std::size_t best = rep.candidates.size();
    double best_dist = step;
    for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
      const double dist = std::abs(rep.candidates[i].location - zd);
      if (!used[i] && dist <= best_dist) {
        best = i;
        best_dist = dist;
      }
    }
    if (best == rep.candidates.size()) {
      rep.unmatched_predictions.push_back(z);
    } else {
      used[best] = true;
      rep.matched.push_back({rep.candidates[best], z});
    }
  }
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    if (!used[i]) rep.unmatched_candidates.push_back(rep.candidates[i]);
  }
  return rep;
}

std::vector<Rational> greedy_orthogonal_family(const BiIntervalRegion& region, const Rational& bound) {
  std::vector<Rational> order = enumerate_zeros(region, -bound, bound);
  std::stable_sort(order.begin(), order.end(), [](const Rational& x, const Rational& y) {
    const Rational ax = x.abs(), ay = y.abs();
    return ax < ay || (ax == ay && x < y);
  });

  std::vector<Rational> family{Rational(0)};
  for (const Rational& cand : order) {
    const bool fits = std::all_of(family.begin(), family.end(), [&](const Rational& mu) {
      return classify_frequency(region, cand - mu).is_zero;
    });
    if (fits) family.push_back(cand);
  }
  std::sort(family.begin(), family.end());
  return family;
}

RegionCheck check_region(const BiIntervalRegion& region) {
  RegionCheck out;
  const Classification spectral = classify_region(region);
  const Classification tiles = classify_tiles(region);
  out.admissible = spectral.admits_any();
  if (!(spectral == tiles)) {
    out.equivalent = false;
    out.pipeline_ok = false;
    out.failure = "classification mismatch at " + describe(region);
    return out;
  }
  if (!out.admissible) return out;

  auto fail = [&](const std::string& what) {
    out.pipeline_ok = false;
    out.failure = what + " at " + describe(region);
    return out;
  };

  std::vector<CaseSelector> cases;
  if (spectral.case_i) cases.push_back(CaseSelector::CaseI);
  if (spectral.case_ii_n) cases.push_back(CaseSelector::CaseII);

  for (CaseSelector which : cases) {
    const SpectrumSpec spec = build_spectrum(region, which);
    const auto freqs = enumerate_frequencies(spec, Rational(10));
    if (!difference_set_in_zeros(region, freqs).pass) return fail("orthogonality");
    if (gram_matrix(region, freqs).max_off_diagonal() >= 1e-10) return fail("gram");
    const ParsevalReport pr = parseval_sum(region, spec, Rational(1, 3), 200);
    if (!(pr.defect <= pr.tail_bound)) return fail("parseval");

    const TilingSpec tiling = build_tiling(region, which);
    const RationalInterval window{Rational(0), tiling.period * 3};
    if (!verify_tiling(region, tiling, window).exact_cover) return fail("coverage");
    if (which == CaseSelector::CaseI && region.r() < Rational(1, 2) &&
        !alternation_check(region, tiling, window).alternates) {
      return fail("alternation");
    }
  }
  return out;
}

DriverSummary random_region_driver(std::size_t count, std::uint64_t seed, std::int64_t max_denominator) {
  SplitMix64 rng(seed);
  DriverSummary summary;
  for (std::size_t i = 0; i < count; ++i) {
    const BiIntervalRegion region = random_region(rng, max_denominator);
    const RegionCheck check = check_region(region);
    ++summary.count;
    if (!check.equivalent) ++summary.equivalence_failures;
    if (check.admissible) {
      ++summary.admissible;
      if (!check.pipeline_ok) ++summary.pipeline_failures;
    } else {
      ++summary.skipped;
    }
    if (!check.failure.empty()) summary.failures.push_back(check.failure);
  }
  return summary;
}

}  // namespace biinterval
