#include "polya/lemma_polys.hpp"

#include <chrono>
#include <string>

#include "polya/constants.hpp"
#include "polya/error.hpp"

namespace polya::lemma {
namespace {

using constants::ConstantId;
using poly::IntervalPoly;

RationalInterval cst(ConstantId id) {
  static const Rational eps(mpz_class(1), mpz_class(1) << 200);
  return constants::enclose(id, eps);
}

RationalInterval num(long p, long q = 1) { return RationalInterval(Rational(p, q)); }

IntervalPoly term(const RationalInterval& c, int degree) { return IntervalPoly::monomial(c, degree); }

IntervalPoly one() { return term(num(1), 0); }

IntervalPoly p1_acute() {
  // kappa = k 2^(1/3) / pi^(2/3), k = 23/10
  const RationalInterval kappa = cst(ConstantId::K) * cst(ConstantId::Cbrt2) / cst(ConstantId::PiTwoThirds);
  const IntervalPoly tan_hi = term(num(1), 3) + term(num(1, 3), 9) + term(num(2, 5), 15);
  const IntervalPoly tan_lo = term(num(1), 3) + term(num(1, 3), 9) + term(num(2, 15), 15);
  const IntervalPoly left = term(num(5), 3) * (one() + num(4) * pow(tan_hi, 2));
  const IntervalPoly right = num(3) * tan_lo * pow(one() + term(kappa, 2), 2);
  return left - right;
}

IntervalPoly p1_mono() {
  const RationalInterval c1 = cst(ConstantId::C1);
  const RationalInterval c2 = num(-124) * cst(ConstantId::Zeta5) / cst(ConstantId::PiFifth);
  const IntervalPoly series = term(num(1, 3), 6) + term(c2, 9) + term(num(2, 15), 12) + term(num(17, 315), 18);
  const RationalInterval x2coef = c1 * cst(ConstantId::PiCbrt) / cst(ConstantId::Cbrt2);
  const IntervalPoly factor = term(cst(ConstantId::Pi), 0) + term(x2coef, 2);
  return series * pow(factor, 2);
}

IntervalPoly q_mgeq3() {
  const RationalInterval c1 = cst(ConstantId::C1);
  const IntervalPoly a = one() + term(num(1, 3), 6) + term(num(2, 5), 12);
  const IntervalPoly b = one() - term(num(1, 8), 6);
  const RationalInterval kappa = c1 / (cst(ConstantId::Cbrt2) * cst(ConstantId::PiTwoThirds));
  const IntervalPoly c = one() + term(kappa, 2);
  const RationalInterval z = num(372) * cst(ConstantId::Zeta5) / cst(ConstantId::PiFifth);
  const IntervalPoly d = one() - term(z, 3);
  return pow(a, 2) - pow(b, 4) * pow(c, 2) * d;
}

}  // namespace

const std::vector<std::string_view>& lemma_names() {
  static const std::vector<std::string_view> names = {"P1_acute", "P2_acute", "negP1prime_mono", "Q_mgeq3"};
  return names;
}

IntervalPoly build_interval(std::string_view name) {
  if (name == "P1_acute") return p1_acute();
  if (name == "P2_acute") return poly::taylor_shift(p1_acute(), Rational(49, 100));
  if (name == "negP1prime_mono") return num(-1) * poly::derivative(p1_mono());
  if (name == "Q_mgeq3") return q_mgeq3();
  throw Error(ErrorCode::UnknownName, std::string(name));
}

poly::RationalPoly build_upper(std::string_view name) { return poly::round_upper(build_interval(name)); }

std::vector<Target> targets(std::string_view name) {
  if (name == "P1_acute") return {{Rational(49, 100), Rational(285, 1000)}};
  if (name == "P2_acute") return {{Rational(0), Rational(285, 1000)}};
  if (name == "negP1prime_mono") return {{Rational(0), Rational(444, 1000)}, {Rational(444, 1000), Rational(444, 1000)}};
  if (name == "Q_mgeq3") return {{Rational(0), Rational(686, 1000)}};
  throw Error(ErrorCode::UnknownName, std::string(name));
}

poly::RationalPoly certification_poly(std::string_view name, const Target& t) {
  return poly::round_upper(poly::taylor_shift(build_interval(name), t.shift));
}

std::vector<LemmaRun> certify_lemma(std::string_view name, int max_depth) {
  std::vector<LemmaRun> runs;
  for (const Target& t : targets(name)) {
    const auto start = std::chrono::steady_clock::now();
    poly::RationalPoly p = certification_poly(name, t);
    LemmaRun run{t, certify::certify_nonpositive(p, t.dx, max_depth), 0.0};
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    runs.push_back(std::move(run));
  }
  return runs;
}

}  // namespace polya::lemma
