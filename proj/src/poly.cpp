#include "polya/poly.hpp"

#include <algorithm>
#include <json.hpp>

#include "polya/error.hpp"

namespace polya::poly {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

RationalPoly operator+(const RationalPoly& p, const RationalPoly& q) {
  std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()), Rational(0));
  for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& q : r) q = -q;
  return RationalPoly(std::move(r));
}

RationalPoly operator-(const RationalPoly& p, const RationalPoly& q) { return p + (-q); }

RationalPoly operator*(const RationalPoly& p, const RationalPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> r(p.c_.size() + q.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  }
  return RationalPoly(std::move(r));
}

RationalPoly operator*(const Rational& s, const RationalPoly& p) {
  std::vector<Rational> r(p.c_);
  for (auto& q : r) q *= s;
  return RationalPoly(std::move(r));
}

Rational eval_exact(const RationalPoly& p, const Rational& x) {
  Rational acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

RationalPoly taylor_shift(const RationalPoly& p, const Rational& c) {
  // Repeated synthetic division by (x - c), in place.
  std::vector<Rational> a = p.coeffs();
  const int n = static_cast<int>(a.size()) - 1;
  if (n <= 0 || c == 0) return p;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[j] += c * a[j + 1];
  }
  return RationalPoly(std::move(a));
}

RationalPoly derivative(const RationalPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly pow(const RationalPoly& p, unsigned n) {
  RationalPoly r(std::vector<Rational>{Rational(1)});
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

IntervalPoly::IntervalPoly(std::vector<RationalInterval> coeffs) : c_(std::move(coeffs)) { trim(); }

IntervalPoly::IntervalPoly(const RationalPoly& p) {
  for (const auto& q : p.coeffs()) c_.emplace_back(q);
}

IntervalPoly IntervalPoly::monomial(const RationalInterval& c, int degree) {
  std::vector<RationalInterval> v(degree + 1, RationalInterval(Rational(0)));
  v[degree] = c;
  return IntervalPoly(std::move(v));
}

void IntervalPoly::trim() {
  while (!c_.empty() && c_.back().lo() == 0 && c_.back().hi() == 0) c_.pop_back();
}

IntervalPoly operator+(const IntervalPoly& p, const IntervalPoly& q) {
  std::vector<RationalInterval> r(std::max(p.c_.size(), q.c_.size()), RationalInterval(Rational(0)));
  for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = r[i] + p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] = r[i] + q.c_[i];
  return IntervalPoly(std::move(r));
}

IntervalPoly operator-(const IntervalPoly& p, const IntervalPoly& q) {
  return p + RationalInterval(Rational(-1)) * q;
}

IntervalPoly operator*(const IntervalPoly& p, const IntervalPoly& q) {
  if (p.c_.empty() || q.c_.empty()) return {};
  std::vector<RationalInterval> r(p.c_.size() + q.c_.size() - 1, RationalInterval(Rational(0)));
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
  }
  return IntervalPoly(std::move(r));
}

IntervalPoly operator*(const RationalInterval& s, const IntervalPoly& p) {
  std::vector<RationalInterval> r(p.c_);
  for (auto& q : r) q = s * q;
  return IntervalPoly(std::move(r));
}

IntervalPoly pow(const IntervalPoly& p, unsigned n) {
  IntervalPoly r(std::vector<RationalInterval>{RationalInterval(Rational(1))});
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

IntervalPoly derivative(const IntervalPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<RationalInterval> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(RationalInterval(Rational(static_cast<long>(i))) * c[i]);
  return IntervalPoly(std::move(d));
}

IntervalPoly taylor_shift(const IntervalPoly& p, const Rational& c) {
  std::vector<RationalInterval> a = p.coeffs();
  const int n = static_cast<int>(a.size()) - 1;
  if (n <= 0 || c == 0) return p;
  const RationalInterval ci(c);
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[j] = a[j] + ci * a[j + 1];
  }
  return IntervalPoly(std::move(a));
}

RationalPoly round_upper(const IntervalPoly& p, unsigned digits) {
  std::vector<Rational> r;
  for (const auto& c : p.coeffs()) r.push_back(ceil_decimal(c.hi(), digits));
  return RationalPoly(std::move(r));
}

RationalPoly midpoint(const IntervalPoly& p) {
  std::vector<Rational> r;
  for (const auto& c : p.coeffs()) r.push_back(c.midpoint());
  return RationalPoly(std::move(r));
}

std::string to_json(const RationalPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr.dump();
}

RationalPoly from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be a JSON array");
  std::vector<Rational> c;
  for (const auto& item : j) {
    if (item.is_string()) {
      c.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      c.emplace_back(item.get<long>());
    } else {
      throw Error(ErrorCode::ParseError, "coefficients must be \"p/q\" strings");
    }
  }
  return RationalPoly(std::move(c));
}

}  // namespace polya::poly
