#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biinterval/rational.hpp"
#include "biinterval/region.hpp"

namespace biinterval {

/// Below this |lambda| the Fourier transform is evaluated by a three-term
/// Taylor expansion instead of the removable-singular closed form.
inline constexpr double kSmallFrequency = 1e-8;

/// Membership of a frequency in the zero set {0} U {lambda : FT(lambda) = 0}.
/// For a two-interval region the nonzero zeros split into three arithmetic
/// families:
///   Z1: lambda*a in Z + 1/2 and lambda*(2r - 1) in Z
///   Z2: lambda in Z and lambda*r in Z
///   Z3: lambda in Z and lambda*(a - r) in Z
/// lambda = 0 is a member with no family flag set.
struct ZeroClass {
  bool in_z1 = false;
  bool in_z2 = false;
  bool in_z3 = false;
  bool is_zero = false;

  friend bool operator==(const ZeroClass&, const ZeroClass&) = default;
};

/// Integral of exp(2 pi i lambda x) over the region. Equals 1 at lambda = 0.
std::complex<double> ft_indicator(const BiIntervalRegion& region, double lambda);

/// Same transform at an exact frequency. Phases lambda*r, lambda*a, ... are
/// reduced mod 1 in exact arithmetic before going to floating point, so the
/// result at a true zero is at rounding level even for large lambda.
std::complex<double> ft_indicator(const BiIntervalRegion& region, const Rational& lambda);

/// d/dlambda of ft_indicator, i.e. the integral of 2 pi i x exp(2 pi i lambda x).
std::complex<double> ft_indicator_derivative(const BiIntervalRegion& region, double lambda);

ZeroClass classify_frequency(const BiIntervalRegion& region, const Rational& lambda);

/// All nonzero zeros of the transform in the closed interval [lo, hi],
/// ascending. Exhaustive: Z2 and Z3 are integers, and Z1 lies inside
/// (2j + 1) / (2a), so only those candidates need classifying.
std::vector<Rational> enumerate_zeros(const BiIntervalRegion& region, const Rational& lo, const Rational& hi);

struct OrthogonalityReport {
  bool pass = true;
  /// (lambda_k, lambda_k') with k' < k, first in scan order whose difference
  /// falls outside the zero set.
  std::optional<std::pair<Rational, Rational>> first_failure;
  std::size_t pairs_checked = 0;
};

/// Checks that every pairwise difference of freqs lies in the zero set,
/// i.e. that the exponentials are mutually orthogonal on the region.
/// Throws Error{DomainError} if freqs has a repeated entry.
OrthogonalityReport difference_set_in_zeros(const BiIntervalRegion& region, std::span<const Rational> freqs);

}  // namespace biinterval
