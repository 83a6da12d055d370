#include <doctest.h>

#include "polya/constants.hpp"
#include "polya/error.hpp"
#include "polya/interval.hpp"

using namespace polya;
using constants::ConstantId;

TEST_SUITE("constants") {

TEST_CASE("interval arithmetic") {
  const RationalInterval x(Rational(1), Rational(2)), y(Rational(3), Rational(4));
  const auto p = x * y;
  CHECK(p.lo() == 3);
  CHECK(p.hi() == 8);
  const auto sq = pow(RationalInterval(Rational(-1), Rational(1)), 2);
  CHECK(sq.lo() == 0);
  CHECK(sq.hi() == 1);
  const auto d = RationalInterval(Rational(2), Rational(3)) / RationalInterval(Rational(1), Rational(2));
  CHECK(d.lo() == 1);
  CHECK(d.hi() == 3);
  CHECK_THROWS_AS(x / RationalInterval(Rational(-1), Rational(1)), Error);
}

TEST_CASE("exact rational constants") {
  const auto k = constants::enclose(ConstantId::K, Rational(1, 1000));
  CHECK(k.lo() == Rational(23, 10));
  CHECK(k.hi() == Rational(23, 10));
  const auto c1 = constants::enclose("c1", Rational(1, 1000));
  CHECK(c1.lo() == Rational(2338107, 1000000));
  CHECK(c1.hi() == Rational(2338107, 1000000));
}

TEST_CASE("c1 is below the Airy zero magnitude") {
  const auto airy = constants::enclose(ConstantId::NegAiryA1, Rational(1, 1000000000000));
  CHECK(airy.lo() > Rational(2338107, 1000000));
  CHECK(to_double(airy.lo()) == doctest::Approx(2.338107410459767).epsilon(1e-12));
}

TEST_CASE("zeta(5)") {
  const Rational eps(1, 1000000000000);
  const auto z = constants::enclose(ConstantId::Zeta5, eps);
  CHECK(z.width() <= eps);
  CHECK(z.contains(parse_rational("1.0369277551433699")));
}

TEST_CASE("pi and roots") {
  const auto pi = constants::enclose(ConstantId::Pi, Rational(1, 1000000000000000));
  CHECK(pi.contains(parse_rational("3.14159265358979323846")));
  const auto c2 = constants::enclose(ConstantId::Cbrt2, Rational(1, 1000000000000));
  CHECK(to_double(c2.lo()) == doctest::Approx(1.2599210498948732).epsilon(1e-12));
  const auto p23 = constants::enclose(ConstantId::PiTwoThirds, Rational(1, 1000000000000));
  CHECK(to_double(p23.hi()) == doctest::Approx(2.1450293971110255).epsilon(1e-12));
}

TEST_CASE("enclosures nest as eps shrinks") {
  for (auto id : constants::all_constants()) {
    const auto coarse = constants::enclose(id, Rational(1, 1000000));
    const auto fine = constants::enclose(id, Rational(1, 1000000000000));
    CHECK(fine.subset_of(coarse));
  }
}

TEST_CASE("unknown names and bad eps") {
  CHECK_THROWS_AS(constants::enclose("tau", Rational(1, 10)), Error);
  CHECK_THROWS_AS(constants::enclose(ConstantId::Pi, Rational(0)), Error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("285/1000") == Rational(57, 200));
  CHECK(parse_rational("0.285") == Rational(57, 200));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(floor_decimal(Rational(2, 3), 3) == Rational(333, 500));
  CHECK(ceil_decimal(Rational(2, 3), 3) == Rational(667, 1000));
}

}
