#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polya {

using Rational = mpq_class;

/// Accepts "p/q", integers, and plain decimals ("0.285", "-1.5e-3").
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);
/// Exact rational value of a double.
Rational from_double(double x);

/// Largest multiple of 2^-bits that is <= q.
Rational floor_dyadic(const Rational& q, unsigned bits);
/// Smallest multiple of 2^-bits that is >= q.
Rational ceil_dyadic(const Rational& q, unsigned bits);
/// Smallest multiple of 10^-digits that is >= q.
Rational ceil_decimal(const Rational& q, unsigned digits);
Rational floor_decimal(const Rational& q, unsigned digits);

/// Closed interval [lo, hi] with rational endpoints.
class RationalInterval {
 public:
  RationalInterval() = default;
  explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}
  RationalInterval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool subset_of(const RationalInterval& other) const { return other.lo_ <= lo_ && hi_ <= other.hi_; }

  /// Outward rounding of both ends to the dyadic grid 2^-bits.
  RationalInterval rounded_out(unsigned bits) const;

  RationalInterval operator-() const { return {-hi_, -lo_}; }
  friend RationalInterval operator+(const RationalInterval& x, const RationalInterval& y);
  friend RationalInterval operator-(const RationalInterval& x, const RationalInterval& y);
  friend RationalInterval operator*(const RationalInterval& x, const RationalInterval& y);
  /// Throws DivisionByIntervalContainingZero.
  friend RationalInterval operator/(const RationalInterval& x, const RationalInterval& y);

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// Integer power; even powers of intervals straddling zero start at zero.
RationalInterval pow(const RationalInterval& x, int n);
RationalInterval hull(const RationalInterval& x, const RationalInterval& y);

}  // namespace polya
