#pragma once

#include <string>
#include <vector>

#include "polya/interval.hpp"

namespace polya::poly {

/// Dense univariate polynomial with exact rational coefficients; coeffs[i]
/// multiplies x^i. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;

  friend RationalPoly operator+(const RationalPoly& p, const RationalPoly& q);
  friend RationalPoly operator-(const RationalPoly& p, const RationalPoly& q);
  friend RationalPoly operator*(const RationalPoly& p, const RationalPoly& q);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& p);
  RationalPoly operator-() const;
  friend bool operator==(const RationalPoly& p, const RationalPoly& q) { return p.c_ == q.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

Rational eval_exact(const RationalPoly& p, const Rational& x);
/// Q(x) = P(x + c), exact.
RationalPoly taylor_shift(const RationalPoly& p, const Rational& c);
RationalPoly derivative(const RationalPoly& p);
RationalPoly pow(const RationalPoly& p, unsigned n);

/// Polynomial with interval coefficients, used to expand expressions in
/// irrational constants before a single rounding step.
class IntervalPoly {
 public:
  IntervalPoly() = default;
  explicit IntervalPoly(std::vector<RationalInterval> coeffs);
  explicit IntervalPoly(const RationalPoly& p);
  static IntervalPoly monomial(const RationalInterval& c, int degree);

  const std::vector<RationalInterval>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  friend IntervalPoly operator+(const IntervalPoly& p, const IntervalPoly& q);
  friend IntervalPoly operator-(const IntervalPoly& p, const IntervalPoly& q);
  friend IntervalPoly operator*(const IntervalPoly& p, const IntervalPoly& q);
  friend IntervalPoly operator*(const RationalInterval& s, const IntervalPoly& p);

 private:
  void trim();
  std::vector<RationalInterval> c_;
};

IntervalPoly pow(const IntervalPoly& p, unsigned n);
IntervalPoly derivative(const IntervalPoly& p);
/// Encloses the coefficients of P(x + c) for every P in the family.
IntervalPoly taylor_shift(const IntervalPoly& p, const Rational& c);

/// Each coefficient replaced by a rational >= its interval's upper end
/// (decimal ceiling at `digits` places). For x > 0 the result dominates every
/// member of the family.
RationalPoly round_upper(const IntervalPoly& p, unsigned digits = 40);
/// Coefficientwise midpoints.
RationalPoly midpoint(const IntervalPoly& p);

/// JSON array of "p/q" strings, index = degree.
std::string to_json(const RationalPoly& p);
RationalPoly from_json(const std::string& text);

}  // namespace polya::poly
