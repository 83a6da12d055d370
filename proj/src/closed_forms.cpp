#include "polya/closed_forms.hpp"

#include <cmath>

#include "polya/error.hpp"

namespace polya::closed_forms {
namespace {

constexpr double kPi = geometry::kPi;

// Sum over odd l of 1/l^2 and 1/l^4.
constexpr double kOddInvSquares = kPi * kPi / 8.0;
constexpr double kOddInvFourth = kPi * kPi * kPi * kPi / 96.0;

// Bound for the part of sum_{k,l odd} 1/(k^2 l^2 (b^2 k^2 + a^2 l^2)) with k >= K.
double rect_tail_rows(double a, double b, int K) {
  const double g = static_cast<double>(K - 2);
  const double via_k4 = kOddInvSquares / (b * b) / (6.0 * g * g * g);
  const double via_l4 = kOddInvFourth / (a * a) / (2.0 * g);
  return std::min(via_k4, via_l4);
}

void require_rectangle(const geometry::Rectangle& r) {
  if (!(r.a > 0.0) || !(r.b > 0.0)) throw Error(ErrorCode::DegenerateShape, "rectangle half-widths must be positive");
}

void require_terms(int n_terms) {
  if (n_terms < 1) throw Error(ErrorCode::InvalidArgument, "n_terms must be >= 1");
}

// sum_{n,m < N} 1/(k^2 l^2 (b^2 k^2 + a^2 l^2)), k = 2n+1, l = 2m+1.
SeriesValue rect_core_sum(double a, double b, int n_terms) {
  require_terms(n_terms);
  double sum = 0.0;
  // Smallest terms first.
  for (int n = n_terms - 1; n >= 0; --n) {
    const double k = 2.0 * n + 1.0;
    const double k2 = k * k;
    double row = 0.0;
    for (int m = n_terms - 1; m >= 0; --m) {
      const double l = 2.0 * m + 1.0;
      const double l2 = l * l;
      row += 1.0 / (k2 * l2 * (b * b * k2 + a * a * l2));
    }
    sum += row;
  }
  const int K = 2 * n_terms + 1;
  const double tail = rect_tail_rows(a, b, K) + rect_tail_rows(b, a, K);
  return {sum, tail, n_terms};
}

}  // namespace

EquilateralValues equilateral_exact() {
  EquilateralValues v;
  v.T = std::sqrt(3.0) / 320.0;
  v.lambda1 = 16.0 * kPi * kPi / 3.0;
  v.F = kPi * kPi / 15.0;
  return v;
}

EquilateralFields equilateral_fields(double x, double y) {
  const double s3 = std::sqrt(3.0);
  EquilateralFields f;
  f.u = y * (s3 * x - y) * (s3 * (1.0 - x) - y) / (2.0 * s3);
  f.phi = std::sin(4.0 * kPi * y / s3) - std::sin(2.0 * kPi * (x + y / s3)) + std::sin(2.0 * kPi * (x - y / s3));
  return f;
}

SeriesValue sector_torsion(const geometry::Sector& s, int n_terms) {
  if (!(s.angle > 0.0) || !(s.angle < kPi / 2.0)) {
    throw Error(ErrorCode::AngleOutOfRange, "sector torsion needs 0 < angle < pi/2");
  }
  if (!(s.radius > 0.0)) throw Error(ErrorCode::DegenerateShape, "sector radius must be positive");
  require_terms(n_terms);
  const double alpha = s.angle;
  const double delta = 2.0 * alpha / kPi;
  double sum = 0.0;
  for (int i = n_terms - 1; i >= 0; --i) {
    const double n = 2.0 * i + 1.0;
    sum += 1.0 / (n * n * (n + delta) * (n + delta) * (n - delta));
  }
  const double r4 = std::pow(s.radius, 4);
  const double coeff = 128.0 * std::pow(alpha, 4) / std::pow(kPi, 5);
  SeriesValue v;
  v.value = r4 / 16.0 * (std::tan(alpha) - alpha - coeff * sum);
  const double M = 2.0 * n_terms + 1.0;
  const double odd_fifth_tail = 1.0 / (8.0 * std::pow(M - 2.0, 4));
  v.tail_bound = r4 / 16.0 * coeff * odd_fifth_tail / (1.0 - delta / M);
  v.terms_used = n_terms;
  return v;
}

double rect_lambda1(const geometry::Rectangle& r) {
  require_rectangle(r);
  const double x = kPi / (2.0 * r.a);
  const double y = kPi / (2.0 * r.b);
  return x * x + y * y;
}

SeriesValue rect_torsion(const geometry::Rectangle& r, int n_terms) {
  require_rectangle(r);
  SeriesValue s = rect_core_sum(r.a, r.b, n_terms);
  const double pref = std::pow(4.0, 5) * std::pow(r.a * r.b, 3) / std::pow(kPi, 6);
  return {pref * s.value, pref * s.tail_bound, s.terms_used};
}

SeriesValue rect_F(const geometry::Rectangle& r, int n_terms) {
  require_rectangle(r);
  SeriesValue s = rect_core_sum(r.a, r.b, n_terms);
  const double pref = 64.0 * (r.a * r.a + r.b * r.b) / std::pow(kPi, 4);
  return {pref * s.value, pref * s.tail_bound, s.terms_used};
}

SeriesValue rect_center_torsion(const geometry::Rectangle& r, int n_terms) {
  require_rectangle(r);
  require_terms(n_terms);
  // Inner sum over m in closed form: (pi/4)(1 - sech(k pi b / 2a)).
  auto term = [&](int n) {
    const double k = 2.0 * n + 1.0;
    const double inner = (kPi / 4.0) * (1.0 - 1.0 / std::cosh(k * kPi * r.b / (2.0 * r.a)));
    return inner / (k * k * k);
  };
  double sum = 0.0;
  for (int n = n_terms - 1; n >= 0; --n) {
    sum += (n % 2 == 0 ? 1.0 : -1.0) * term(n);
  }
  const double pref = 64.0 * r.a * r.a / std::pow(kPi, 4);
  // Alternating with decreasing magnitudes: first omitted term bounds the rest.
  return {pref * sum, pref * term(n_terms), n_terms};
}

SeriesValue rect_torsion_single_sum(const geometry::Rectangle& r, int n_terms) {
  require_rectangle(r);
  require_terms(n_terms);
  const double a = r.a;
  const double b = r.b;
  // sum_{l odd} 1/(l^2 + z^2) = pi tanh(pi z / 2) / (4 z)
  double sum = 0.0;
  for (int n = n_terms - 1; n >= 0; --n) {
    const double k = 2.0 * n + 1.0;
    const double z = b * k / a;
    const double inner = (kOddInvSquares - kPi * std::tanh(kPi * z / 2.0) / (4.0 * z)) / (b * b * k * k);
    sum += inner / (k * k);
  }
  const int K = 2 * n_terms + 1;
  const double g = K - 2.0;
  const double tail = kOddInvSquares / (b * b) / (6.0 * g * g * g);
  const double pref = std::pow(4.0, 5) * std::pow(a * b, 3) / std::pow(kPi, 6);
  return {pref * sum, pref * tail, n_terms};
}

SeriesValue rect_center_torsion_strip(const geometry::Rectangle& r, int n_terms) {
  require_rectangle(r);
  require_terms(n_terms);
  const double a = r.a;
  const double b = r.b;
  auto term = [&](int k) {
    const double j = 2.0 * k + 1.0;
    return 1.0 / (j * j * j * std::cosh(j * kPi * a / (2.0 * b)));
  };
  double sum = 0.0;
  for (int k = n_terms - 1; k >= 0; --k) sum += (k % 2 == 0 ? 1.0 : -1.0) * term(k);
  const double pref = 16.0 * b * b / (kPi * kPi * kPi);
  return {b * b / 2.0 - pref * sum, pref * term(n_terms), n_terms};
}

}  // namespace polya::closed_forms
