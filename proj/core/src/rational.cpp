#include "biinterval/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace biinterval {

namespace {

using wide = detail::int128;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(wide n, wide d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
  Rational q;
  q.num_ = static_cast<std::int64_t>(n);
  q.den_ = static_cast<std::int64_t>(d);
  return q;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
  Rational q = *this;
  q.num_ = -num_;
  return q;
}

Rational operator+(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) return Rational::from_wide(wide(x.num_) + y.num_, x.den_);
  return Rational::from_wide(wide(x.num_) * y.den_ + wide(y.num_) * x.den_, wide(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) return Rational::from_wide(wide(x.num_) - y.num_, x.den_);
  return Rational::from_wide(wide(x.num_) * y.den_ - wide(y.num_) * x.den_, wide(x.den_) * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return Rational::from_wide(wide(x.num_) * y.num_, wide(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational::from_wide(wide(x.num_) * y.den_, wide(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return wide(x.num_) * y.den_ <=> wide(y.num_) * x.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d <= 0) return std::nullopt;
  return Rational(*n, *d);
}

Rational Rational::approximate(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::domain_error("cannot rationalize a non-finite value");
  if (max_den < 1) throw std::domain_error("max_den must be positive");

  // Convergents h/k of the continued fraction of x.
  wide h_prev = 1, h = static_cast<wide>(std::floor(x));
  wide k_prev = 0, k = 1;
  double rem = x - std::floor(x);
  while (rem > 1e-15) {
    double inv = 1.0 / rem;
    auto term = static_cast<wide>(std::floor(inv));
    rem = inv - std::floor(inv);
    wide k_next = term * k + k_prev;
    if (k_next > max_den) {
      // Largest semiconvergent that still fits, kept only if it beats h/k.
      wide t = (max_den - k_prev) / k;
      wide hs = t * h + h_prev;
      wide ks = t * k + k_prev;
      if (t > 0) {
        double err_semi = std::abs(x - static_cast<double>(hs) / static_cast<double>(ks));
        double err_conv = std::abs(x - static_cast<double>(h) / static_cast<double>(k));
        if (err_semi < err_conv) return from_wide(hs, ks);
      }
      break;
    }
    wide h_next = term * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return from_wide(h, k);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace biinterval
