#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "biinterval/rational.hpp"
#include "biinterval/region.hpp"

namespace biinterval {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, golden-ratio
/// increment, variant-13 finalizer. split() derives an independent stream
/// from the next output.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }
  SplitMix64 split() { return SplitMix64(next()); }

  /// Uniform integer in [lo, hi] by rejection; identical on every platform.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  std::uint64_t state_;
};

/// r = u/q in (0, 1/2] and a = v/q in [r, max_a] with 2 <= q <= max_denominator.
BiIntervalRegion random_region(SplitMix64& rng, std::int64_t max_denominator = 64, std::int64_t max_a = 10);

/// Region drawn from one admissible family. Case (i): random r as above,
/// a = r + m with m in [0, max_a - 1]. Case (ii): r = 1/2, a = n/2 with n in [1, 2 * max_a].
BiIntervalRegion random_admissible_region(SplitMix64& rng, CaseSelector which, std::int64_t max_denominator = 64,
                                          std::int64_t max_a = 10);

struct ZeroCandidate {
  double location = 0.0;
  double min_modulus = 0.0;
};

/// Local minima of |FT| on the grid lo + i*step covering [lo, hi], each
/// refined by 40 bisection steps on the sign of d|FT|^2/dlambda inside its
/// two-cell bracket, and kept when the refined modulus is below threshold
/// and the location lies in (lo, hi] up to 1e-9 at either end.
std::vector<ZeroCandidate> scan_zeros(const BiIntervalRegion& region, double lo, double hi, double step,
                                      double threshold);

struct ZeroMatch {
  ZeroCandidate candidate;
  Rational zero;
};

struct ZeroScanReport {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  std::vector<ZeroCandidate> candidates;
  std::vector<ZeroMatch> matched;
  std::vector<ZeroCandidate> unmatched_candidates;
  std::vector<Rational> unmatched_predictions;

  bool pass() const { return unmatched_candidates.empty() && unmatched_predictions.empty(); }
};

/// Matches the numerical scan against the exact zeros in (lo, hi] with
/// denominator <= denominator_bound. Each prediction pairs with the nearest
/// unused candidate within one grid step.
ZeroScanReport reconcile(const BiIntervalRegion& region, const Rational& lo, const Rational& hi, double step,
                         double threshold, std::int64_t denominator_bound);

/// Greedy Z-orthogonal family in [-bound, bound]: start from 0, visit the
/// zeros by increasing |lambda| (negative first on ties) and keep each one
/// whose difference with every kept frequency is in the zero set.
std::vector<Rational> greedy_orthogonal_family(const BiIntervalRegion& region, const Rational& bound);

/// Outcome of the end-to-end checks on one region.
struct RegionCheck {
  bool equivalent = true;    // classify_region == classify_tiles
  bool admissible = false;
  bool pipeline_ok = true;   // orthogonality, Gram, Parseval and coverage smoke checks
  std::string failure;       // first failing check, empty when all pass
};

RegionCheck check_region(const BiIntervalRegion& region);

struct DriverSummary {
  std::size_t count = 0;
  std::size_t equivalence_failures = 0;
  std::size_t admissible = 0;
  std::size_t pipeline_failures = 0;
  std::size_t skipped = 0;        // not admissible, constructions not attempted
  std::vector<std::string> failures;

  bool all_passed() const { return equivalence_failures == 0 && pipeline_failures == 0; }
  friend bool operator==(const DriverSummary&, const DriverSummary&) = default;
};

/// Draws count regions with random_region from the seed and runs check_region on each.
DriverSummary random_region_driver(std::size_t count, std::uint64_t seed, std::int64_t max_denominator = 64);

}  // namespace biinterval
