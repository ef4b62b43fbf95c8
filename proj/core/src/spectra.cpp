#include "biinterval/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "biinterval/fourier.hpp"

namespace biinterval {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMatchWindow = 1e-12;

/// Neumaier compensated sum; order of accumulation is the caller's.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double sin_pi(double x) {
  x -= 2.0 * std::nearbyint(x / 2.0);
  return std::sin(kPi * x);
}

double parseval_tail_bound(const SpectrumSpec& spec, double lambda, std::int64_t K) {
  const double d_right = double(K) - lambda;
  const double d_left = double(K) + lambda;
  if (d_right <= 0.0 || d_left <= 0.0) return std::numeric_limits<double>::infinity();
  const double g = double(spec.step());
  const double per_progression =
      1.0 / (d_right * d_right) + 1.0 / (g * d_right) + 1.0 / (d_left * d_left) + 1.0 / (g * d_left);
  return double(spec.residue_offsets().size()) * per_progression / (kPi * kPi);
}

void finish(ParsevalReport& rep) { rep.defect = std::abs(rep.target.to_double() - rep.partial_sum); }

}  // namespace

SpectrumSpec SpectrumSpec::half_integer(std::int64_t n, std::int64_t p) {
  if (n < 1) throw Error(ErrorKind::DomainError, "n must be a positive integer");
  if (p % 2 == 0) throw Error(ErrorKind::EvenP, "p must be odd, got " + std::to_string(p));
  return SpectrumSpec(Kind::HalfInteger, n, p);
}

std::vector<Rational> SpectrumSpec::residue_offsets() const {
  if (kind_ == Kind::Lattice) return {Rational(0)};
  return {Rational(0), offset()};
}

bool SpectrumSpec::contains(const Rational& lambda) const {
  for (const Rational& c : residue_offsets()) {
    if (((lambda - c) / step()).is_integer()) return true;
  }
  return false;
}

SpectrumSpec build_spectrum(const BiIntervalRegion& region, CaseSelector which, std::int64_t p) {
  const Classification c = classify_region(region);
  if (!c.admits_any()) {
    throw Error(ErrorKind::NotSpectral, "region (r=" + region.r().str() + ", a=" + region.a().str() +
                                            ") satisfies neither admissible case");
  }
  if (which == CaseSelector::CaseI) {
    if (!c.case_i) throw Error(ErrorKind::CaseUnavailable, "case (i) needs a - r to be an integer");
    return SpectrumSpec::lattice();
  }
  if (!c.case_ii_n) throw Error(ErrorKind::CaseUnavailable, "case (ii) needs r = 1/2 and 2a integral");
  return SpectrumSpec::half_integer(*c.case_ii_n, p);
}

std::vector<Rational> enumerate_frequencies(const SpectrumSpec& spec, const Rational& bound) {
  std::vector<Rational> out;
  const std::int64_t g = spec.step();
  for (const Rational& c : spec.residue_offsets()) {
    // c + g*m in [-bound, bound]
    const std::int64_t m_lo = ((-bound - c) / g).ceil();
    const std::int64_t m_hi = ((bound - c) / g).floor();
    for (std::int64_t m = m_lo; m <= m_hi; ++m) out.push_back(c + Rational(g * m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::complex<double> inner_product(const BiIntervalRegion& region, double lambda, double mu) {
  if (lambda == mu) return 1.0;
  return ft_indicator(region, lambda - mu);
}

std::complex<double> inner_product(const BiIntervalRegion& region, const Rational& lambda, const Rational& mu) {
  if (lambda == mu) return 1.0;
  return ft_indicator(region, lambda - mu);
}

double GramMatrix::max_off_diagonal() const {
  double m = 0.0;
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (j != k) m = std::max(m, std::abs((*this)(j, k)));
    }
  }
  return m;
}

double GramMatrix::max_diagonal_deviation() const {
  double m = 0.0;
  for (std::size_t j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(j, j) - 1.0));
  return m;
}

GramMatrix gram_matrix(const BiIntervalRegion& region, std::span<const Rational> freqs) {
  GramMatrix g(freqs.size());
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    g(j, j) = 1.0;
    for (std::size_t k = j + 1; k < freqs.size(); ++k) {
      const auto v = inner_product(region, freqs[j], freqs[k]);
      g(j, k) = v;
      g(k, j) = std::conj(v);
    }
  }
  return g;
}

ParsevalReport parseval_partial(const BiIntervalRegion& region, std::span<const Rational> freqs,
                                const Rational& lambda) {
  ParsevalReport rep;
  rep.target = region.r();
  const double r = region.r().to_double();
  CompensatedSum sum;
  for (const Rational& mu : freqs) {
    const Rational d = lambda - mu;
    if (d.is_zero()) {
      rep.exact_match_present = true;
      sum.add(r * r);
      continue;
    }
    // |c_k|^2 = sin^2(pi d r) / (pi d)^2; the sine only needs d*r mod 1.
    const double s = sin_pi((d * region.r()).frac().to_double());
    const double dd = d.to_double();
    sum.add(s * s / (kPi * kPi * dd * dd));
  }
  rep.partial_sum = sum.value();
  finish(rep);
  return rep;
}

ParsevalReport parseval_sum(const BiIntervalRegion& region, const SpectrumSpec& spec, const Rational& lambda,
                            std::int64_t K) {
  if (K < 1) throw Error(ErrorKind::DomainError, "truncation K must be at least 1");
  const auto freqs = enumerate_frequencies(spec, Rational(K));
  ParsevalReport rep = parseval_partial(region, freqs, lambda);
  rep.truncation_K = K;
  rep.tail_bound = parseval_tail_bound(spec, lambda.to_double(), K);
  return rep;
}

ParsevalReport parseval_sum(const BiIntervalRegion& region, const SpectrumSpec& spec, double lambda,
                            std::int64_t K) {
  if (K < 1) throw Error(ErrorKind::DomainError, "truncation K must be at least 1");
  if (!std::isfinite(lambda)) throw Error(ErrorKind::DomainError, "lambda must be finite");
  ParsevalReport rep;
  rep.target = region.r();
  rep.truncation_K = K;
  const double r = region.r().to_double();
  CompensatedSum sum;
  for (const Rational& mu : enumerate_frequencies(spec, Rational(K))) {
    const double d = lambda - mu.to_double();
    if (std::abs(d) < kMatchWindow) {
      rep.exact_match_present = true;
      rep.match_is_approximate = true;
      sum.add(r * r);
      continue;
    }
    const double s = sin_pi(d * r);
    sum.add(s * s / (kPi * kPi * d * d));
  }
  rep.partial_sum = sum.value();
  rep.tail_bound = parseval_tail_bound(spec, lambda, K);
  finish(rep);
  return rep;
}

STildeResult s_tilde_partial(double beta, std::int64_t K) {
  if (!(beta > 0.0 && beta < 1.0)) throw Error(ErrorKind::DomainError, "beta must lie in (0, 1)");
  if (K < 0) throw Error(ErrorKind::DomainError, "K must be non-negative");

  // |e^{2 pi i beta} - 1|^2 / (4 pi^2) = sin^2(pi beta) / pi^2
  const double s = sin_pi(beta);
  const double weight = s * s / (kPi * kPi);

  // Smallest terms first.
  CompensatedSum sum;
  for (std::int64_t k = K; k >= 1; --k) {
    const double up = beta + double(k);
    const double down = beta - double(k);
    sum.add(1.0 / (up * up));
    sum.add(1.0 / (down * down));
  }
  sum.add(1.0 / (beta * beta));

  STildeResult out;
  out.partial = weight * sum.value();
  if (K >= 1) {
    out.tail_bound = weight * (1.0 / (double(K) + beta - 1.0) + 1.0 / (double(K) - beta));
  } else {
    const double p = 1.0 + beta;
    const double m = 1.0 - beta;
    out.tail_bound = weight * (1.0 / (p * p) + 1.0 / p + 1.0 / (m * m) + 1.0 / m);
  }
  return out;
}

AlphaPartition alpha_partition(std::span<const Rational> freqs, const Rational& r) {
  std::map<Rational, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < freqs.size(); ++k) groups[(freqs[k] * r).frac()].push_back(k);
  AlphaPartition out;
  out.classes.reserve(groups.size());
  for (auto& [beta, members] : groups) out.classes.push_back({beta, std::move(members)});
  return out;
}

}  // namespace biinterval
