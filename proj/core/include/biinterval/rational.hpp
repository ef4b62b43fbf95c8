#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace biinterval {

namespace detail {
__extension__ typedef __int128 int128;
}  // namespace detail

/// Exact rational number p/q with q > 0 and gcd(|p|, q) = 1.
///
/// Storage is 64-bit; every operation widens to 128 bits and throws
/// std::overflow_error if the reduced result does not fit back. The values
/// handled by this library (denominators in the low thousands, magnitudes
/// well below 10^9) never come close.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  std::int64_t floor() const;
  std::int64_t ceil() const;
  /// Fractional part in [0, 1).
  Rational frac() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  /// Parses "p", "-p", "p/q". Rejects zero denominators and trailing junk.
  static std::optional<Rational> parse(std::string_view text);

  /// Best rational approximation with denominator <= max_den, via continued
  /// fraction convergents and the final admissible semiconvergent.
  static Rational approximate(double x, std::int64_t max_den);

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  static Rational from_wide(detail::int128 n, detail::int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }
inline Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

/// Half-open interval [lo, hi) with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool empty() const { return !(lo < hi); }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

}  // namespace biinterval
