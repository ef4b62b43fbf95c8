#include "biinterval/region.hpp"

namespace biinterval {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::OverlappingIntervals: return "OverlappingIntervals";
    case ErrorKind::NotSpectral: return "NotSpectral";
    case ErrorKind::CaseUnavailable: return "CaseUnavailable";
    case ErrorKind::EvenP: return "EvenP";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotATile: return "NotATile";
    case ErrorKind::NotVerified: return "NotVerified";
  }
  return "Unknown";
}

BiIntervalRegion::BiIntervalRegion(Rational r, Rational a) : r_(r), a_(a) {
  if (!(r_ > 0) || r_ > Rational(1, 2)) {
    throw Error(ErrorKind::DomainError, "r must satisfy 0 < r <= 1/2, got " + r_.str());
  }
  if (a_ < r_) throw Error(ErrorKind::DomainError, "a must satisfy a >= r, got a = " + a_.str());
}

RationalInterval AffineMap::apply(const RationalInterval& iv) const {
  Rational x = apply(iv.lo);
  Rational y = apply(iv.hi);
  return x < y ? RationalInterval{x, y} : RationalInterval{y, x};
}

std::pair<BiIntervalRegion, AffineMap> canonicalize(const RawIntervalPair& raw) {
  if (raw.first.empty() || raw.second.empty()) {
    throw Error(ErrorKind::EmptyInterval, "both intervals need positive length");
  }
  if (!(raw.first.hi <= raw.second.lo || raw.second.hi <= raw.first.lo)) {
    throw Error(ErrorKind::OverlappingIntervals, "intervals intersect in a set of positive length");
  }

  const RationalInterval& left = raw.first.lo < raw.second.lo ? raw.first : raw.second;
  const RationalInterval& right = raw.first.lo < raw.second.lo ? raw.second : raw.first;
  const Rational total = left.length() + right.length();

  AffineMap map;
  map.scale = total;
  if (left.length() <= right.length()) {
    map.shift = left.lo;
    BiIntervalRegion region(left.length() / total, (right.lo - left.lo) / total);
    return {region, map};
  }

  // Reflect through the hull midpoint: the right interval becomes (0, r).
  map.shift = right.hi;
  map.reflected = true;
  BiIntervalRegion region(right.length() / total, (right.hi - left.hi) / total);
  return {region, map};
}

Classification classify_region(const BiIntervalRegion& region) {
  Classification c;
  c.case_i = region.gap().is_integer();
  if (region.r() == Rational(1, 2)) {
    Rational twice_a = region.a() * 2;
    if (twice_a.is_integer()) c.case_ii_n = twice_a.num();
  }
  return c;
}

std::array<RationalInterval, 2> map_region(const BiIntervalRegion& region, const AffineMap& map) {
  return {map.apply(region.first_interval()), map.apply(region.second_interval())};
}

}  // namespace biinterval
