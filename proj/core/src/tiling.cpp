#include "biinterval/tiling.hpp"

#include <algorithm>
#include <map>

namespace biinterval {

namespace {

const Rational kHalf(1, 2);

Rational reduce_mod(const Rational& x, const Rational& period) {
  return x - Rational((x / period).floor()) * period;
}

void push_merged(std::vector<RationalInterval>& out, const RationalInterval& iv) {
  if (!out.empty() && out.back().hi == iv.lo) {
    out.back().hi = iv.hi;
  } else {
    out.push_back(iv);
  }
}

/// All translates t = residue + m * period with t in [lo, hi).
std::vector<Rational> translates_in(const TilingSpec& tiling, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  for (const Rational& c : tiling.residues) {
    const std::int64_t m_lo = ((lo - c) / tiling.period).ceil();
    const std::int64_t m_hi = ((hi - c) / tiling.period).ceil() - 1;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) out.push_back(c + Rational(m) * tiling.period);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TilingSpec TilingSpec::make(Rational period, std::vector<Rational> residues) {
  if (!(period > 0)) throw Error(ErrorKind::DomainError, "tiling period must be positive");
  if (residues.empty()) throw Error(ErrorKind::DomainError, "tiling needs at least one residue");
  for (Rational& c : residues) c = reduce_mod(c, period);
  std::sort(residues.begin(), residues.end());
  if (std::adjacent_find(residues.begin(), residues.end()) != residues.end()) {
    throw Error(ErrorKind::DomainError, "tiling residues repeat modulo the period");
  }
  TilingSpec t;
  t.period = period;
  t.residues = std::move(residues);
  return t;
}

Classification classify_tiles(const BiIntervalRegion& region) {
  Classification c;
  // Second interval mod 1 is [frac(a), frac(a) + 1 - r); it complements
  // [0, r) on the circle exactly when it starts at r.
  c.case_i = region.a().frac() == region.r();
  if (region.r() == kHalf) {
    const Rational slots = region.gap() / kHalf;
    if (slots.is_integer()) c.case_ii_n = slots.num() + 1;
  }
  return c;
}

TilingSpec build_tiling(const BiIntervalRegion& region, CaseSelector which) {
  const Classification c = classify_tiles(region);
  if (!c.admits_any()) {
    throw Error(ErrorKind::NotATile, "region (r=" + region.r().str() + ", a=" + region.a().str() +
                                         ") does not tile the line");
  }
  if (which == CaseSelector::CaseI) {
    if (!c.case_i) throw Error(ErrorKind::CaseUnavailable, "case (i) needs a - r to be an integer");
    return TilingSpec::make(Rational(1), {Rational(0)});
  }
  if (!c.case_ii_n) throw Error(ErrorKind::CaseUnavailable, "case (ii) needs r = 1/2 and 2a integral");
  const std::int64_t n = *c.case_ii_n;
  std::vector<Rational> residues;
  residues.reserve(std::size_t(n));
  for (std::int64_t s = 0; s < n; ++s) residues.emplace_back(s, 2);
  return TilingSpec::make(Rational(n), std::move(residues));
}

std::vector<TilePiece> pieces_in_window(const BiIntervalRegion& region, const TilingSpec& tiling,
                                        const RationalInterval& window) {
  std::vector<TilePiece> pieces;
  if (window.empty()) return pieces;
  const Rational extent = region.right_end();
  for (const Rational& t : translates_in(tiling, window.lo - extent, window.hi)) {
    const RationalInterval first{t, t + region.r()};
    const RationalInterval second{t + region.a(), t + extent};
    for (const auto& [span, is_first] : {std::pair{first, true}, std::pair{second, false}}) {
      if (span.hi > window.lo && span.lo < window.hi) pieces.push_back({span, is_first, t});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const TilePiece& x, const TilePiece& y) { return x.span.lo < y.span.lo; });
  return pieces;
}

CoverageReport verify_tiling(const BiIntervalRegion& region, const TilingSpec& tiling, const RationalInterval& window) {
  CoverageReport rep;
  rep.window = window;
  if (window.empty()) return rep;

  std::map<Rational, int> delta;
  delta[window.lo] += 0;
  delta[window.hi] += 0;
  for (const TilePiece& p : pieces_in_window(region, tiling, window)) {
    delta[max(p.span.lo, window.lo)] += 1;
    delta[min(p.span.hi, window.hi)] -= 1;
  }

  int depth = 0;
  for (auto it = delta.begin(); it != delta.end(); ++it) {
    depth += it->second;
    auto next = std::next(it);
    if (next == delta.end() || it->first >= window.hi) break;
    const RationalInterval seg{it->first, next->first};
    if (depth == 0) push_merged(rep.gaps, seg);
    if (depth >= 2) push_merged(rep.overlaps, seg);
  }
  rep.exact_cover = rep.gaps.empty() && rep.overlaps.empty();
  return rep;
}

AlternationResult alternation_check(const BiIntervalRegion& region, const TilingSpec& tiling,
                                    const RationalInterval& window) {
  if (!verify_tiling(region, tiling, window).exact_cover) {
    throw Error(ErrorKind::NotVerified, "tiling is not an exact cover of the window");
  }
  AlternationResult out;
  if (region.r() == kHalf) return out;
  const auto pieces = pieces_in_window(region, tiling, window);
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].is_first == pieces[i - 1].is_first) {
      out.alternates = false;
      out.violation = std::make_pair(pieces[i - 1], pieces[i]);
      break;
    }
  }
  return out;
}

}  // namespace biinterval
