#include <gmpxx.h>

#include <algorithm>
#include <cmath>

#include "polya/closed_forms.hpp"
#include "polya/error.hpp"

namespace polya::closed_forms {
namespace {

// S(x) = sum_k (-1)^k y^k / (k! (nu+1)_k), y = x^2/4, so that
// J_nu(x) = (x/2)^nu S(x) / Gamma(nu+1). The prefactor is positive for x > 0,
// so S carries the sign of J_nu. Terms grow to roughly e^x before cancelling;
// working precision is raised accordingly.
mpf_class normalized_series(double nu, double x) {
  const mp_bitcnt_t bits = 96 + static_cast<mp_bitcnt_t>(3.0 * x);
  mpf_class y(x, bits);
  y = y * y / 4;
  mpf_class nu_f(nu, bits);
  mpf_class term(1, bits);
  mpf_class sum(1, bits);
  mpf_class eps(1, bits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits - 8);
  for (long k = 1;; ++k) {
    term = -term * y / (mpf_class(k, bits) * (nu_f + k));
    sum += term;
    // Past k (nu + k) > 2y the tail is dominated by a ratio-1/2 geometric series.
    if (k * (nu + k) > 2.0 * y.get_d() && abs(term) < eps * abs(sum)) break;
    if (k > 100000) throw Error(ErrorCode::ConvergenceFailure, "Bessel series did not converge");
  }
  return sum;
}

int series_sign(double nu, double x) { return sgn(normalized_series(nu, x)); }

}  // namespace

double bessel_j(double nu, double x) {
  if (nu < 0.0) throw Error(ErrorCode::DomainError, "bessel_j needs nu >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x < 0.0) throw Error(ErrorCode::DomainError, "bessel_j needs x >= 0");
  const mpf_class s = normalized_series(nu, x);
  if (nu < 150.0) return std::pow(x / 2.0, nu) / std::tgamma(nu + 1.0) * s.get_d();
  long e = 0;
  const double m = mpf_get_d_2exp(&e, s.get_mpf_t());
  return std::exp(nu * std::log(x / 2.0) - std::lgamma(nu + 1.0) + static_cast<double>(e) * std::log(2.0)) * m;
}

double bessel_first_zero(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw Error(ErrorCode::DomainError, "bessel_first_zero needs nu >= 0");
  // j_nu > nu, and consecutive zeros are more than pi apart.
  const double step = 0.5;
  const double cutoff = nu + 10.0 * std::cbrt(nu + 1.0) + 10.0;
  double lo = std::max(nu, 1e-3);
  if (series_sign(nu, lo) <= 0) throw Error(ErrorCode::ConvergenceFailure, "unexpected sign at x = nu");
  double hi = lo + step;
  while (series_sign(nu, hi) > 0) {
    lo = hi;
    hi += step;
    if (hi > cutoff) throw Error(ErrorCode::ConvergenceFailure, "no sign change below cutoff");
  }
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (series_sign(nu, mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace polya::closed_forms
