#pragma once

#include <array>
#include <optional>
#include <utility>

#include "biinterval/error.hpp"
#include "biinterval/rational.hpp"

namespace biinterval {

/// Two intervals on the line, in arbitrary order and scale.
struct RawIntervalPair {
  RationalInterval first;
  RationalInterval second;
};

/// Normalized two-interval region (0, r) U (a, a + 1 - r) with 0 < r <= 1/2
/// and a >= r. Total measure is 1.
class BiIntervalRegion {
 public:
  /// Throws Error{DomainError} unless 0 < r <= 1/2 and a >= r.
  BiIntervalRegion(Rational r, Rational a);

  const Rational& r() const { return r_; }
  const Rational& a() const { return a_; }

  /// Length of the gap between the two intervals, a - r (zero when they touch).
  Rational gap() const { return a_ - r_; }
  /// Right end of the region, a + 1 - r.
  Rational right_end() const { return a_ + 1 - r_; }

  RationalInterval first_interval() const { return {Rational(0), r_}; }
  RationalInterval second_interval() const { return {a_, right_end()}; }

  friend bool operator==(const BiIntervalRegion&, const BiIntervalRegion&) = default;

 private:
  Rational r_;
  Rational a_;
};

/// x -> shift + scale * x, or x -> shift - scale * x when reflected. Carries
/// canonical coordinates back to the caller's coordinates.
struct AffineMap {
  Rational scale{1};
  Rational shift{0};
  bool reflected = false;

  Rational apply(const Rational& x) const { return reflected ? shift - scale * x : shift + scale * x; }
  /// Image of an interval, endpoints reordered so lo < hi.
  RationalInterval apply(const RationalInterval& iv) const;
  bool is_identity() const { return scale == 1 && shift == 0 && !reflected; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Which of the two admissible families a region belongs to. Both may hold.
struct Classification {
  bool case_i = false;                   // a - r is an integer
  std::optional<std::int64_t> case_ii_n;  // r = 1/2 and n = 2a

  bool admits_any() const { return case_i || case_ii_n.has_value(); }
  friend bool operator==(const Classification&, const Classification&) = default;
};

enum class CaseSelector { CaseI, CaseII };

/// Brings an arbitrary pair of disjoint intervals to normal form. The second
/// member maps the canonical intervals back onto the input ones (as a set).
///
/// The shorter interval becomes (0, r); when the left input interval is the
/// longer one the map reflects about the midpoint of the convex hull. Equal
/// lengths never reflect.
std::pair<BiIntervalRegion, AffineMap> canonicalize(const RawIntervalPair& raw);

Classification classify_region(const BiIntervalRegion& region);

/// Both canonical intervals pushed through the map, in the map's output order.
std::array<RationalInterval, 2> map_region(const BiIntervalRegion& region, const AffineMap& map);

}  // namespace biinterval
