#pragma once

#include <string_view>
#include <vector>

#include "polya/interval.hpp"

namespace polya::constants {

enum class ConstantId {
  Pi,
  PiCbrt,        ///< pi^(1/3)
  PiTwoThirds,   ///< pi^(2/3)
  PiFourThirds,  ///< pi^(4/3)
  PiSquared,
  PiFifth,
  SqrtPi,
  Zeta5,
  Cbrt2,         ///< 2^(1/3)
  Cbrt4,         ///< 2^(2/3)
  Sqrt2,
  Sqrt3,
  Sqrt5,
  NegAiryA1,     ///< -a_1, magnitude of the first Airy zero
  C1,            ///< 2338107/10^6, certified lower bound for -a_1
  K,             ///< 23/10
};

ConstantId constant_from_string(std::string_view name);
std::string_view to_string(ConstantId id);
const std::vector<ConstantId>& all_constants();

/// Interval of width <= eps containing the constant. Results for a finer eps
/// are nested inside results for a coarser one.
RationalInterval enclose(ConstantId id, const Rational& eps);
RationalInterval enclose(std::string_view name, const Rational& eps);

/// Dyadic bits of the cached high-precision tables; enclose() rejects eps
/// below 2^-(kMasterBits - 16).
inline constexpr unsigned kMasterBits = 640;

/// Nested n-th root bracket of a nonnegative rational interval, by bisection
/// on the dyadic grid 2^-bits.
RationalInterval nth_root(const RationalInterval& x, unsigned n, unsigned bits);

/// Machin-formula enclosure of pi with explicit alternating remainders.
RationalInterval pi_machin(unsigned bits);

/// zeta(5) from a partial sum plus Euler-Maclaurin tail; the first omitted
/// correction bounds the remainder (x^-5 is completely monotone).
RationalInterval zeta5_enclosure(unsigned bits);

}  // namespace polya::constants
