// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "biinterval/fourier.hpp"
#include "biinterval/region.hpp"
#include "biinterval/spectra.hpp"
#include "biinterval/tiling.hpp"
#include "biinterval/verify.hpp"

using namespace biinterval;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Admissible {
  BiIntervalRegion region;
  CaseSelector which;
  std::int64_t p;
};

std::string describe(const BiIntervalRegion& region) {
  return "(r=" + region.r().str() + ", a=" + region.a().str() + ")";
}

std::vector<Admissible> admissible_regions() {
  SplitMix64 rng(kSeed ^ 0xA);
  std::vector<Admissible> out;
  for (int i = 0; i < 25; ++i) out.push_back({random_admissible_region(rng, CaseSelector::CaseI), CaseSelector::CaseI, 1});
  for (int i = 0; i < 25; ++i) {
    const BiIntervalRegion region = random_admissible_region(rng, CaseSelector::CaseII);
    out.push_back({region, CaseSelector::CaseII, 2 * rng.uniform(-10, 10) + 1});
  }
  return out;
}

Outcome equivalence() {
  SplitMix64 rng(kSeed);
  std::size_t mismatches = 0, admissible = 0;
  std::string first;
  for (int i = 0; i < 10000; ++i) {
    const BiIntervalRegion region = random_region(rng, 64);
    const Classification c = classify_region(region);
    if (c.admits_any()) ++admissible;
    if (!(c == classify_tiles(region))) {
      if (mismatches++ == 0) first = describe(region);
    }
  }
  std::ostringstream os;
  os << "10000 regions, " << admissible << " admissible, " << mismatches << " discrepancies";
  if (!first.empty()) os << ", first " << first;
  return {mismatches == 0, os.str()};
}

Outcome orthogonality() {
  double worst = 0.0;
  std::size_t largest = 0;
  for (const Admissible& adm : admissible_regions()) {
    const SpectrumSpec spec = build_spectrum(adm.region, adm.which, adm.p);
    const auto freqs = enumerate_frequencies(spec, Rational(100));
    largest = std::max(largest, freqs.size());
    const OrthogonalityReport rep = difference_set_in_zeros(adm.region, freqs);
    if (!rep.pass) return {false, "difference not in zero set for " + describe(adm.region)};
    const GramMatrix g = gram_matrix(adm.region, freqs);
    worst = std::max({worst, g.max_off_diagonal(), g.max_diagonal_deviation()});
  }
  std::ostringstream os;
  os << "50 regions, up to " << largest << " frequencies, max Gram deviation " << worst;
  return {worst < 1e-10, os.str()};
}

Outcome completeness() {
  SplitMix64 rng(kSeed ^ 0xB);
  double worst = 0.0;
  for (const Admissible& adm : admissible_regions()) {
    const SpectrumSpec spec = build_spectrum(adm.region, adm.which, adm.p);
    for (int i = 0; i < 10; ++i) {
      const std::int64_t q = rng.uniform(1, 97);
      const Rational lambda(rng.uniform(-100 * q, 100 * q), q);
      const ParsevalReport rep = parseval_sum(adm.region, spec, lambda, 10000);
      worst = std::max(worst, rep.defect);
      if (!(rep.defect <= rep.tail_bound) || !(rep.defect < 1e-3)) {
        std::ostringstream os;
        os << describe(adm.region) << " lambda=" << lambda << " defect " << rep.defect << " tail " << rep.tail_bound;
        return {false, os.str()};
      }
    }
  }
  std::ostringstream os;
  os << "500 sums at K=10000, max defect " << worst;
  return {true, os.str()};
}

Outcome stilde() {
  double worst = 0.0;
  for (int j = 1; j <= 99; ++j) {
    const double beta = j / 100.0;
    const STildeResult res = s_tilde_partial(beta, 1000);
    const double dev = std::abs(res.partial - 1.0);
    worst = std::max(worst, dev);
    if (!(dev <= res.tail_bound) || !(dev < 2e-3)) {
      std::ostringstream os;
      os << "beta=" << beta << " deviation " << dev << " tail " << res.tail_bound;
      return {false, os.str()};
    }
  }
  std::ostringstream os;
  os << "99 grid points, max deviation " << worst;
  return {true, os.str()};
}

Outcome zeros() {
  SplitMix64 rng(kSeed ^ 0xC);
  std::size_t matched = 0;
  for (int i = 0; i < 50; ++i) {
    const BiIntervalRegion region = random_region(rng, 12, 10);
    const ZeroScanReport rep = reconcile(region, Rational(0), Rational(10), 1e-3, 1e-6, 1000);
    matched += rep.matched.size();
    if (!rep.pass()) {
      std::ostringstream os;
      os << describe(region) << ": " << rep.unmatched_candidates.size() << " unmatched candidates, "
         << rep.unmatched_predictions.size() << " unmatched predictions";
      return {false, os.str()};
    }
  }
  std::ostringstream os;
  os << "50 regions, " << matched << " zeros matched";
  return {true, os.str()};
}

Outcome tilings() {
  std::size_t alternations = 0;
  for (const Admissible& adm : admissible_regions()) {
    const TilingSpec t = build_tiling(adm.region, adm.which);
    const RationalInterval window{Rational(0), t.period * 10};
    if (!verify_tiling(adm.region, t, window).exact_cover) return {false, "coverage fails for " + describe(adm.region)};
    if (adm.which == CaseSelector::CaseI && adm.region.r() < Rational(1, 2)) {
      ++alternations;
      if (!alternation_check(adm.region, t, window).alternates) {
        return {false, "alternation fails for " + describe(adm.region)};
      }
    }
  }
  return {true, "50 exact covers, " + std::to_string(alternations) + " alternation checks"};
}

Outcome negative_control() {
  const BiIntervalRegion region(Rational(1, 3), Rational(1, 2));
  const auto family = greedy_orthogonal_family(region, Rational(50));
  const ParsevalReport rep = parseval_partial(region, family, Rational(0));
  std::ostringstream os;
  os << family.size() << " frequencies, defect " << rep.defect << " (expected 2/9)";
  return {std::abs(rep.defect - 2.0 / 9.0) <= 1e-6, os.str()};
}

Outcome alpha_classes() {
  std::size_t checked = 0;
  for (std::int64_t n = 1; n <= 20; ++n) {
    const BiIntervalRegion region(Rational(1, 2), Rational(n, 2));
    for (std::int64_t p = -9; p <= 9; p += 2) {
      const auto freqs = enumerate_frequencies(build_spectrum(region, CaseSelector::CaseII, p), Rational(100));
      const AlphaPartition part = alpha_partition(freqs, region.r());
      ++checked;
      if (Rational(std::int64_t(part.M())) != Rational(1) / region.r()) {
        return {false, "M=" + std::to_string(part.M()) + " for n=" + std::to_string(n) + " p=" + std::to_string(p)};
      }
    }
  }
  return {true, std::to_string(checked) + " truncations, M = 2 in each"};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"classification equivalence", 5, equivalence},
      {"orthogonality of constructed spectra", 30, orthogonality},
      {"parseval completeness", 60, completeness},
      {"universal series convergence", 5, stilde},
      {"zero set reconciliation", 120, zeros},
      {"tiling exactness", 10, tilings},
      {"negative control", 60, negative_control},
      {"alpha partition size", 60, alpha_classes},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= criteria[i].budget_seconds) {
      out.ok = false;
      out.detail += " [over time budget]";
    }
    if (!out.ok) ++failures;
    std::printf("%s [%zu] %s: %s (%.2fs, budget %.0fs)\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                out.detail.c_str(), secs, criteria[i].budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
