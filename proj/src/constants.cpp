#include "polya/constants.hpp"

#include <array>
#include <mutex>
#include <string>

#include "polya/error.hpp"

namespace polya::constants {
namespace {

mpz_class ipow(const mpz_class& base, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Largest r with r^n * den <= num * 2^(n*bits)  (num, den > 0).
mpz_class root_floor(const Rational& q, unsigned n, unsigned bits) {
  const mpz_class target = q.get_num() << (n * bits);
  const mpz_class& den = q.get_den();
  mpz_class lo = 0;
  mpz_class hi = (mpz_class(q.get_num() / den) + 2) << bits;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) >> 1;
    if (ipow(mid, n) * den <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Rational dyadic(const mpz_class& num, unsigned bits) {
  Rational q(num, mpz_class(1) << bits);
  q.canonicalize();
  return q;
}

// Alternating series enclosure of atan(1/x) for integer x >= 2.
RationalInterval atan_inv(unsigned x, unsigned bits) {
  const mpz_class x2 = mpz_class(x) * x;
  const Rational cutoff(mpz_class(1), mpz_class(1) << (bits + 8));
  Rational sum(0);
  mpz_class power = x;  // x^(2k+1)
  for (unsigned k = 0;; ++k) {
    Rational term(mpz_class(1), power * (2 * k + 1));
    term.canonicalize();
    if (term < cutoff) {
      return RationalInterval(sum - term, sum + term);
    }
    sum += (k % 2 == 0) ? term : Rational(-term);
    power *= x2;
  }
}

std::vector<Rational> bernoulli_numbers(unsigned count) {
  std::vector<Rational> B(count + 1);
  B[0] = 1;
  for (unsigned m = 1; m <= count; ++m) {
    Rational acc(0);
    mpz_class binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      acc += binom * B[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[m] = -acc / (m + 1);
    B[m].canonicalize();
  }
  return B;
}

Rational constant_c1() { return Rational(2338107, 1000000); }

struct MasterTable {
  std::once_flag once;
  std::array<RationalInterval, 16> values;
};

MasterTable& master() {
  static MasterTable table;
  std::call_once(table.once, [] {
    const unsigned bits = kMasterBits + 8;
    auto& v = table.values;
    const RationalInterval pi = pi_machin(bits);
    auto set = [&](ConstantId id, const RationalInterval& x) { v[static_cast<int>(id)] = x.rounded_out(bits); };
    set(ConstantId::Pi, pi);
    set(ConstantId::PiCbrt, nth_root(pi, 3, bits));
    set(ConstantId::PiSquared, pi * pi);
    set(ConstantId::PiTwoThirds, nth_root(pi * pi, 3, bits));
    set(ConstantId::PiFourThirds, pi * nth_root(pi, 3, bits));
    set(ConstantId::PiFifth, pow(pi, 5));
    set(ConstantId::SqrtPi, nth_root(pi, 2, bits));
    set(ConstantId::Zeta5, zeta5_enclosure(bits));
    set(ConstantId::Cbrt2, nth_root(RationalInterval(Rational(2)), 3, bits));
    set(ConstantId::Cbrt4, nth_root(RationalInterval(Rational(4)), 3, bits));
    set(ConstantId::Sqrt2, nth_root(RationalInterval(Rational(2)), 2, bits));
    set(ConstantId::Sqrt3, nth_root(RationalInterval(Rational(3)), 2, bits));
    set(ConstantId::Sqrt5, nth_root(RationalInterval(Rational(5)), 2, bits));
    // Tabulated; widened well beyond the table's last digit.
    const Rational airy = parse_rational("2.33810741045976703848919725244673544063854014567");
    const Rational slack = parse_rational("1e-25");
    v[static_cast<int>(ConstantId::NegAiryA1)] = RationalInterval(airy - slack, airy + slack);
    v[static_cast<int>(ConstantId::C1)] = RationalInterval(constant_c1());
    v[static_cast<int>(ConstantId::K)] = RationalInterval(Rational(23, 10));
  });
  return table;
}

}  // namespace

RationalInterval nth_root(const RationalInterval& x, unsigned n, unsigned bits) {
  if (x.lo() < 0) throw Error(ErrorCode::DomainError, "root of negative interval");
  mpz_class lo = x.lo() == 0 ? mpz_class(0) : root_floor(x.lo(), n, bits);
  mpz_class hi = root_floor(x.hi(), n, bits);
  // Round the upper end up unless it is already exact.
  Rational hi_q = dyadic(hi, bits);
  Rational hi_pow = 1;
  for (unsigned i = 0; i < n; ++i) hi_pow *= hi_q;
  if (hi_pow < x.hi()) hi += 1;
  return {dyadic(lo, bits), dyadic(hi, bits)};
}

RationalInterval pi_machin(unsigned bits) {
  const RationalInterval sixteen(Rational(16));
  const RationalInterval four(Rational(4));
  return (sixteen * atan_inv(5, bits) - four * atan_inv(239, bits)).rounded_out(bits);
}

RationalInterval zeta5_enclosure(unsigned bits) {
  const unsigned N = 128;
  Rational partial(0);
  for (unsigned n = 1; n < N; ++n) {
    partial += Rational(mpz_class(1), ipow(mpz_class(n), 5));
  }
  partial.canonicalize();
  // Sum_{n>=N} n^-5 = N^-4/4 + N^-5/2 + sum_k B_2k/(2k)! (5)_(2k-1) N^-(4+2k) + R.
  const unsigned max_k = 120;
  const std::vector<Rational> B = bernoulli_numbers(2 * max_k + 2);
  const mpz_class Nz = N;
  Rational tail = Rational(mpz_class(1), 4 * ipow(Nz, 4)) + Rational(mpz_class(1), 2 * ipow(Nz, 5));
  const Rational cutoff(mpz_class(1), mpz_class(1) << (bits + 8));
  mpz_class rising = 5;     // (5)_(2k-1)
  mpz_class factorial = 2;  // (2k)!
  for (unsigned k = 1;; ++k) {
    Rational term = B[2 * k] * Rational(rising, factorial * ipow(Nz, 4 + 2 * k));
    term.canonicalize();
    Rational mag = abs(term);
    if (mag < cutoff || k == max_k) {
      if (k == max_k && mag >= cutoff) {
        throw Error(ErrorCode::ConvergenceFailure, "zeta(5) tail did not reach requested precision");
      }
      Rational centre = partial + tail;
      return RationalInterval(centre - mag, centre + mag).rounded_out(bits);
    }
    tail += term;
    rising *= (2 * k + 4) * (2 * k + 5);  // (5)_(2k+1) = (5)_(2k-1) (2k+4)(2k+5)
    factorial *= (2 * k + 1) * (2 * k + 2);
  }
}

ConstantId constant_from_string(std::string_view name) {
  for (ConstantId id : all_constants()) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorCode::UnknownConstant, std::string(name));
}

std::string_view to_string(ConstantId id) {
  switch (id) {
    case ConstantId::Pi: return "pi";
    case ConstantId::PiCbrt: return "pi^1/3";
    case ConstantId::PiTwoThirds: return "pi^2/3";
    case ConstantId::PiFourThirds: return "pi^4/3";
    case ConstantId::PiSquared: return "pi^2";
    case ConstantId::PiFifth: return "pi^5";
    case ConstantId::SqrtPi: return "sqrt_pi";
    case ConstantId::Zeta5: return "zeta5";
    case ConstantId::Cbrt2: return "2^1/3";
    case ConstantId::Cbrt4: return "2^2/3";
    case ConstantId::Sqrt2: return "sqrt2";
    case ConstantId::Sqrt3: return "sqrt3";
    case ConstantId::Sqrt5: return "sqrt5";
    case ConstantId::NegAiryA1: return "-a1";
    case ConstantId::C1: return "c1";
    case ConstantId::K: return "k";
  }
  return "unknown";
}

const std::vector<ConstantId>& all_constants() {
  static const std::vector<ConstantId> ids = {
      ConstantId::Pi,    ConstantId::PiCbrt, ConstantId::PiTwoThirds, ConstantId::PiFourThirds,
      ConstantId::PiSquared, ConstantId::PiFifth, ConstantId::SqrtPi, ConstantId::Zeta5,
      ConstantId::Cbrt2, ConstantId::Cbrt4, ConstantId::Sqrt2, ConstantId::Sqrt3,
      ConstantId::Sqrt5, ConstantId::NegAiryA1, ConstantId::C1, ConstantId::K};
  return ids;
}

RationalInterval enclose(ConstantId id, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const RationalInterval& m = master().values[static_cast<int>(id)];
  if (m.width() == 0) return m;
  // Grid 2^-p with 2^-p <= eps/4; nested grids give nested enclosures.
  unsigned p = 2;
  while (Rational(mpz_class(1), mpz_class(1) << p) > eps / 4) ++p;
  if (p > kMasterBits) {
    if (id == ConstantId::NegAiryA1 && m.width() <= eps) return m;
    throw Error(ErrorCode::InvalidArgument, "requested precision beyond the cached tables");
  }
  RationalInterval out = m.rounded_out(p);
  if (out.width() > eps) {
    throw Error(ErrorCode::InvalidArgument, std::string("cannot reach requested width for ") + std::string(to_string(id)));
  }
  return out;
}

RationalInterval enclose(std::string_view name, const Rational& eps) { return enclose(constant_from_string(name), eps); }

}  // namespace polya::constants
