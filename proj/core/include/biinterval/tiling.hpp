#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "biinterval/rational.hpp"
#include "biinterval/region.hpp"

namespace biinterval {

/// Periodic translation set T = { residue + m * period : m in Z }.
struct TilingSpec {
  Rational period{1};
  std::vector<Rational> residues;  // sorted, distinct, in [0, period)

  /// Sorts residues, reduces them into [0, period) and checks distinctness.
  /// Throws Error{DomainError} for a non-positive period, an empty or
  /// repeating residue list.
  static TilingSpec make(Rational period, std::vector<Rational> residues);

  /// residues / period; a measure-one tile needs density exactly 1.
  Rational density() const { return Rational(std::int64_t(residues.size())) / period; }

  friend bool operator==(const TilingSpec&, const TilingSpec&) = default;
};

/// Result of an exact sweep over a window. Intervals are half-open, sorted
/// and maximal (adjacent pieces merged).
struct CoverageReport {
  bool exact_cover = true;
  std::vector<RationalInterval> gaps;
  std::vector<RationalInterval> overlaps;
  RationalInterval window;
};

/// Decides whether the region tiles the line, without going through
/// classify_region: case (i) holds when the two intervals reduced mod 1
/// partition the circle R/Z; case (ii) when r = 1/2 and the gap is filled by
/// a whole number of half-unit slots. The output contract matches
/// classify_region.
Classification classify_tiles(const BiIntervalRegion& region);

/// Case (i): T = Z. Case (ii), n = 2a: period n, residues {0, 1/2, ..., (n-1)/2};
/// the translate at s/2 fills half-slots s and s + n of each block of 2n.
/// Throws Error{NotATile} when the region admits no case and
/// Error{CaseUnavailable} when the selected one is not admitted.
TilingSpec build_tiling(const BiIntervalRegion& region, CaseSelector which);

/// Exact sweep of all translates meeting the window. Translates t with
/// t in [window.lo - (a + 1 - r), window.hi) are included.
CoverageReport verify_tiling(const BiIntervalRegion& region, const TilingSpec& tiling, const RationalInterval& window);

/// One translated copy of either interval of the region (unclipped).
struct TilePiece {
  RationalInterval span;
  bool is_first;   // translate of (0, r) rather than (a, a + 1 - r)
  Rational translate;
};

struct AlternationResult {
  bool alternates = true;
  /// The two consecutive pieces carrying the same label, if any.
  std::optional<std::pair<TilePiece, TilePiece>> violation;
};

/// Sorts the translate pieces meeting the window by left end and checks that
/// copies of the two intervals strictly alternate. Vacuously true at
/// r = 1/2. Throws Error{NotVerified} if the tiling is not an exact cover of
/// the window.
AlternationResult alternation_check(const BiIntervalRegion& region, const TilingSpec& tiling,
                                    const RationalInterval& window);

/// Every translate piece meeting the window, sorted by left endpoint.
std::vector<TilePiece> pieces_in_window(const BiIntervalRegion& region, const TilingSpec& tiling,
                                        const RationalInterval& window);

}  // namespace biinterval
