#pragma once

#include <string_view>
#include <vector>

#include "polya/certify.hpp"
#include "polya/poly.hpp"

namespace polya::lemma {

/// Names: "P1_acute", "P2_acute", "negP1prime_mono", "Q_mgeq3".
const std::vector<std::string_view>& lemma_names();

/// Exact expansion with interval coefficients (constants enclosed to 2^-200).
poly::IntervalPoly build_interval(std::string_view name);
/// Upper-rounded rational coefficients; certifying P <= 0 for x > 0 on this
/// polynomial implies it for the true one. Throws UnknownName.
poly::RationalPoly build_upper(std::string_view name);

/// A certification run: the polynomial recentred at `shift`, certified on (0, dx].
struct Target {
  Rational shift;
  Rational dx;
};
std::vector<Target> targets(std::string_view name);

/// Interval expansion shifted by target.shift, then upper-rounded once.
poly::RationalPoly certification_poly(std::string_view name, const Target& t);

struct LemmaRun {
  Target target;
  certify::Certificate certificate;
  double seconds = 0.0;
};
std::vector<LemmaRun> certify_lemma(std::string_view name, int max_depth = certify::kDefaultMaxDepth);

}  // namespace polya::lemma
