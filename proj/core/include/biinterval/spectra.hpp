#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "biinterval/rational.hpp"
#include "biinterval/region.hpp"

namespace biinterval {

/// Symbolic frequency set: either the integers, or 2Z U (p/n + 2Z) with p odd.
class SpectrumSpec {
 public:
  enum class Kind { Lattice, HalfInteger };

  static SpectrumSpec lattice() { return SpectrumSpec(Kind::Lattice, 1, 0); }
  /// Throws Error{EvenP} for even p and Error{DomainError} for n < 1.
  static SpectrumSpec half_integer(std::int64_t n, std::int64_t p);

  Kind kind() const { return kind_; }
  std::int64_t n() const { return n_; }
  std::int64_t p() const { return p_; }
  /// p/n, the offset of the second residue class (zero for the lattice).
  Rational offset() const { return kind_ == Kind::Lattice ? Rational(0) : Rational(p_, n_); }
  /// Common difference of every arithmetic progression making up the set.
  std::int64_t step() const { return kind_ == Kind::Lattice ? 1 : 2; }
  /// Offsets of the progressions; the set is the union of offset + step * Z.
  std::vector<Rational> residue_offsets() const;

  bool contains(const Rational& lambda) const;

  friend bool operator==(const SpectrumSpec&, const SpectrumSpec&) = default;

 private:
  SpectrumSpec(Kind k, std::int64_t n, std::int64_t p) : kind_(k), n_(n), p_(p) {}

  Kind kind_;
  std::int64_t n_;
  std::int64_t p_;
};

/// Spectrum for an admissible region: the integers in case (i), and
/// 2Z U (p/n + 2Z) with n = 2a in case (ii).
SpectrumSpec build_spectrum(const BiIntervalRegion& region, CaseSelector which, std::int64_t p = 1);

/// The members of spec inside [-bound, bound], ascending.
std::vector<Rational> enumerate_frequencies(const SpectrumSpec& spec, const Rational& bound);

/// <e_lambda, e_mu> on the region: the transform of the indicator at lambda - mu.
std::complex<double> inner_product(const BiIntervalRegion& region, double lambda, double mu);
std::complex<double> inner_product(const BiIntervalRegion& region, const Rational& lambda, const Rational& mu);

/// Dense Hermitian Gram matrix, row-major.
class GramMatrix {
 public:
  explicit GramMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  std::complex<double>& operator()(std::size_t j, std::size_t k) { return data_[j * n_ + k]; }
  const std::complex<double>& operator()(std::size_t j, std::size_t k) const { return data_[j * n_ + k]; }

  double max_off_diagonal() const;
  /// max |G(j,j) - 1|.
  double max_diagonal_deviation() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> data_;
};

GramMatrix gram_matrix(const BiIntervalRegion& region, std::span<const Rational> freqs);

/// Parseval bookkeeping for the test function 1_(0,r)(x) exp(2 pi i lambda x),
/// whose squared norm on the region is r.
struct ParsevalReport {
  Rational target;                  // r
  double partial_sum = 0.0;         // sum of |c_k|^2 over the truncation
  bool exact_match_present = false; // some lambda_k equals lambda, contributing r^2
  bool match_is_approximate = false;// match found by a 1e-12 window, not exactly
  double tail_bound = 0.0;          // bound on the omitted |c_k|^2; +inf if K <= |lambda|
  double defect = 0.0;              // |r - partial_sum|
  std::int64_t truncation_K = 0;
};

/// Sum of |c_k|^2 = |int_0^r exp(2 pi i (lambda - lambda_k) x) dx|^2 over an
/// arbitrary finite family. tail_bound is left at zero.
ParsevalReport parseval_partial(const BiIntervalRegion& region, std::span<const Rational> freqs,
                                const Rational& lambda);

/// Parseval sum over the members of spec with |lambda_k| <= K.
///
/// Tail bound. Each omitted term obeys |c_k|^2 <= 1 / (pi^2 d^2), d = lambda - lambda_k.
/// spec is a union of progressions with common difference g. On the right,
/// the omitted members of one progression sit at distances D_R + g*j + s
/// (j >= 0, s >= 0) with D_R = K - lambda, so by the integral test
///     sum <= 1/D_R^2 + 1/(g D_R).
/// The left side is the same with D_L = K + lambda. Summing over progressions:
///     tail_bound = (1/pi^2) * sum_prog (1/D_R^2 + 1/(g D_R) + 1/D_L^2 + 1/(g D_L)),
/// strictly decreasing in K. When K <= |lambda| the bound is +inf.
ParsevalReport parseval_sum(const BiIntervalRegion& region, const SpectrumSpec& spec, const Rational& lambda,
                            std::int64_t K);
/// Floating-point lambda: the exact-match test uses a 1e-12 window and is
/// flagged approximate when it fires.
ParsevalReport parseval_sum(const BiIntervalRegion& region, const SpectrumSpec& spec, double lambda,
                            std::int64_t K);

struct STildeResult {
  double partial = 0.0;
  double tail_bound = 0.0;
};

/// Partial sum over |k| <= K of |e^{2 pi i beta} - 1|^2 / (4 pi^2 (beta + k)^2);
/// the full series equals 1 for every beta in (0, 1).
///
/// For K >= 1 the integral test gives
///     tail_bound = |e^{2 pi i beta} - 1|^2 / (4 pi^2) * (1/(K + beta - 1) + 1/(K - beta)).
/// K = 0 has no integral majorant of that form, so the first omitted term on
/// each side is kept explicitly: 1/(1+b)^2 + 1/(1+b) + 1/(1-b)^2 + 1/(1-b).
/// Throws Error{DomainError} unless 0 < beta < 1 and K >= 0.
STildeResult s_tilde_partial(double beta, std::int64_t K);

struct AlphaClass {
  Rational beta;                      // common value of lambda * r mod 1, in [0, 1)
  std::vector<std::size_t> members;   // indices into the input list
};

struct AlphaPartition {
  std::vector<AlphaClass> classes;    // ordered by beta
  std::size_t M() const { return classes.size(); }
};

/// Groups frequencies by lambda * r mod 1: k ~ k' iff (lambda_k - lambda_k') r is an integer.
AlphaPartition alpha_partition(std::span<const Rational> freqs, const Rational& r);

}  // namespace biinterval
