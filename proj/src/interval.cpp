#include "polya/interval.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "polya/error.hpp"

namespace polya {
namespace {

mpz_class pow10(unsigned digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

mpz_class ceil_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Rational make(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  try {
    if (s.find('/') != std::string::npos) {
      Rational q(s, 10);
      if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + s);
      q.canonicalize();
      return q;
    }
    // Decimal with optional exponent, taken exactly.
    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      exponent = std::stol(s.substr(e + 1));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(0, 1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (char c : mantissa) {
      if (c == '.') {
        if (seen_dot) throw Error(ErrorCode::ParseError, "bad decimal: " + s);
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_dot) ++frac_digits;
      } else {
        throw Error(ErrorCode::ParseError, "bad decimal: " + s);
      }
    }
    if (digits.empty()) throw Error(ErrorCode::ParseError, "bad decimal: " + s);
    mpz_class num(digits, 10);
    if (negative) num = -num;
    long scale = frac_digits - exponent;
    if (scale >= 0) return make(num, pow10(static_cast<unsigned>(scale)));
    return Rational(num * pow10(static_cast<unsigned>(-scale)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad rational: " + s);
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str() + "/1";
  return q.get_str();
}

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

Rational from_double(double x) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational floor_dyadic(const Rational& q, unsigned bits) {
  mpz_class den = mpz_class(1) << bits;
  return make(floor_div(q.get_num() * den, q.get_den()), den);
}

Rational ceil_dyadic(const Rational& q, unsigned bits) {
  mpz_class den = mpz_class(1) << bits;
  return make(ceil_div(q.get_num() * den, q.get_den()), den);
}

Rational ceil_decimal(const Rational& q, unsigned digits) {
  mpz_class den = pow10(digits);
  return make(ceil_div(q.get_num() * den, q.get_den()), den);
}

Rational floor_decimal(const Rational& q, unsigned digits) {
  mpz_class den = pow10(digits);
  return make(floor_div(q.get_num() * den, q.get_den()), den);
}

RationalInterval::RationalInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
}

RationalInterval RationalInterval::rounded_out(unsigned bits) const {
  return {floor_dyadic(lo_, bits), ceil_dyadic(hi_, bits)};
}

RationalInterval operator+(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo_ + y.lo_, x.hi_ + y.hi_};
}

RationalInterval operator-(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo_ - y.hi_, x.hi_ - y.lo_};
}

RationalInterval operator*(const RationalInterval& x, const RationalInterval& y) {
  Rational p[4] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval operator/(const RationalInterval& x, const RationalInterval& y) {
  if (y.contains_zero()) {
    throw Error(ErrorCode::DivisionByIntervalContainingZero, "divisor interval contains 0");
  }
  return x * RationalInterval(1 / y.hi_, 1 / y.lo_);
}

RationalInterval pow(const RationalInterval& x, int n) {
  if (n < 0) return RationalInterval(Rational(1)) / pow(x, -n);
  if (n == 0) return RationalInterval(Rational(1));
  auto ipow = [](Rational base, int e) {
    Rational r(1);
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  };
  Rational a = ipow(x.lo(), n);
  Rational b = ipow(x.hi(), n);
  if (n % 2 == 1) return {a, b};
  if (x.contains_zero()) return {Rational(0), std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}

RationalInterval hull(const RationalInterval& x, const RationalInterval& y) {
  return {std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

}  // namespace polya
