#include "biinterval/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace biinterval {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// exp(2 pi i t) for t already reduced to a small range.
cplx unit_phase(double t) {
  t -= std::nearbyint(t);
  return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)};
}

cplx unit_phase(const Rational& t) { return unit_phase(t.frac().to_double()); }

/// Integral of x^k over the region.
double region_moment(const BiIntervalRegion& region, int k) {
  const double r = region.r().to_double();
  const double a = region.a().to_double();
  const double e = region.right_end().to_double();
  return (std::pow(r, k + 1) + std::pow(e, k + 1) - std::pow(a, k + 1)) / (k + 1);
}

cplx small_frequency_series(const BiIntervalRegion& region, double lambda) {
  const cplx c(0.0, kTwoPi * lambda);
  return region_moment(region, 0) + c * region_moment(region, 1) + c * c * region_moment(region, 2) / 2.0;
}

}  // namespace

cplx ft_indicator(const BiIntervalRegion& region, double lambda) {
  if (lambda == 0.0) return 1.0;
  if (std::abs(lambda) < kSmallFrequency) return small_frequency_series(region, lambda);
  const double r = region.r().to_double();
  const double a = region.a().to_double();
  const double e = region.right_end().to_double();
  const cplx numer = unit_phase(lambda * r) - 1.0 + unit_phase(lambda * e) - unit_phase(lambda * a);
  return numer / cplx(0.0, kTwoPi * lambda);
}

cplx ft_indicator(const BiIntervalRegion& region, const Rational& lambda) {
  if (lambda.is_zero()) return 1.0;
  const double l = lambda.to_double();
  if (std::abs(l) < kSmallFrequency) return small_frequency_series(region, l);
  const cplx numer = unit_phase(lambda * region.r()) - 1.0 + unit_phase(lambda * region.right_end()) -
                     unit_phase(lambda * region.a());
  return numer / cplx(0.0, kTwoPi * l);
}

cplx ft_indicator_derivative(const BiIntervalRegion& region, double lambda) {
  const cplx i2pi(0.0, kTwoPi);
  const cplx c = i2pi * lambda;
  const double e = region.right_end().to_double();
  if (std::abs(lambda) * e < 1e-2) {
    // sum_k c^k / k! * m_{k+1}; |c| * e < 0.07 so a dozen terms is plenty.
    cplx sum = 0.0;
    cplx coeff = 1.0;
    for (int k = 0; k < 12; ++k) {
      sum += coeff * region_moment(region, k + 1);
      coeff *= c / double(k + 1);
    }
    return i2pi * sum;
  }
  // Antiderivative of x e^{cx} is e^{cx} (x/c - 1/c^2).
  auto prim = [&](double x) { return unit_phase(lambda * x) * (x / c - 1.0 / (c * c)); };
  const double r = region.r().to_double();
  const double a = region.a().to_double();
  return i2pi * (prim(r) - prim(0.0) + prim(e) - prim(a));
}

ZeroClass classify_frequency(const BiIntervalRegion& region, const Rational& lambda) {
  ZeroClass z;
  if (lambda.is_zero()) {
    z.is_zero = true;
    return z;
  }
  const Rational& r = region.r();
  const Rational& a = region.a();
  z.in_z1 = (lambda * a).frac() == Rational(1, 2) && (lambda * (r * 2 - 1)).is_integer();
  z.in_z2 = lambda.is_integer() && (lambda * r).is_integer();
  z.in_z3 = lambda.is_integer() && (lambda * (a - r)).is_integer();
  z.is_zero = z.in_z1 || z.in_z2 || z.in_z3;
  return z;
}

std::vector<Rational> enumerate_zeros(const BiIntervalRegion& region, const Rational& lo, const Rational& hi) {
  std::set<Rational> found;
  if (hi < lo) return {};
  for (std::int64_t m = lo.ceil(); m <= hi.floor(); ++m) {
    if (m != 0 && classify_frequency(region, Rational(m)).is_zero) found.insert(Rational(m));
  }
  // Z1 candidates: lambda = (2j + 1) / (2a).
  const Rational two_a = region.a() * 2;
  const std::int64_t j_lo = ((two_a * lo - 1) / 2).ceil();
  const std::int64_t j_hi = ((two_a * hi - 1) / 2).floor();
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    const Rational lambda = Rational(2 * j + 1) / two_a;
    if (classify_frequency(region, lambda).in_z1) found.insert(lambda);
  }
  return {found.begin(), found.end()};
}

OrthogonalityReport difference_set_in_zeros(const BiIntervalRegion& region, std::span<const Rational> freqs) {
  std::vector<Rational> sorted(freqs.begin(), freqs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DomainError, "frequency list contains a repeated entry");
  }

  OrthogonalityReport report;
  for (std::size_t k = 1; k < freqs.size(); ++k) {
    for (std::size_t kp = 0; kp < k; ++kp) {
      ++report.pairs_checked;
      if (!classify_frequency(region, freqs[k] - freqs[kp]).is_zero) {
        report.pass = false;
        report.first_failure = std::make_pair(freqs[k], freqs[kp]);
        return report;
      }
    }
  }
  return report;
}

}  // namespace biinterval
