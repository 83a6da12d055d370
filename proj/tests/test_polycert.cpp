#include <doctest.h>

#include <algorithm>
#include <random>

#include "polya/certify.hpp"
#include "polya/error.hpp"
#include "polya/lemma_polys.hpp"
#include "polya/poly.hpp"

using namespace polya;
using poly::RationalPoly;

namespace {
RationalPoly P(std::initializer_list<Rational> c) { return RationalPoly(std::vector<Rational>(c)); }
}  // namespace

TEST_SUITE("polycert") {

TEST_CASE("taylor shift") {
  CHECK(poly::taylor_shift(P({0, 0, 1}), Rational(1, 2)) == P({Rational(1, 4), 1, 1}));
  const auto p = P({3, -1, Rational(2, 7), 0, 5});
  CHECK(poly::taylor_shift(p, 0) == p);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-50, 50), deg(0, 12);
  for (int k = 0; k < 200; ++k) {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = Rational(coef(rng), 1 + std::abs(coef(rng)));
    for (auto& x : c) x.canonicalize();
    const RationalPoly q(c);
    const Rational s(coef(rng), 1 + std::abs(coef(rng)));
    CHECK(poly::taylor_shift(poly::taylor_shift(q, s), -s) == q);
  }
}

TEST_CASE("reduced constant") {
  CHECK(certify::reduced_constant(P({-1, 0, 1}), 1) == 0);
  CHECK(certify::reduced_constant(P({-1, 1}), Rational(1, 2)) == Rational(-1, 2));
}

TEST_CASE("simple certificates") {
  const auto c0 = certify::certify_nonpositive(P({-1}), 5);
  CHECK(c0.ok());
  CHECK(c0.depth == 0);
  const auto c1 = certify::certify_nonpositive(P({Rational(-1, 3), 1}), Rational(1, 3));
  CHECK(c1.ok());
  CHECK(certify::tiles(c1));
  const auto bad = certify::certify_nonpositive(P({1, -1}), 2, 12);
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.failure_witness.has_value());
  CHECK(bad.failure_witness->lo == 0);
  CHECK_THROWS_AS(certify::certify_nonpositive(P({-1}), 0), Error);
}

TEST_CASE("subdivision recovers a certificate") {
  // -(x - 1/2)^2 - 1/100 < 0 on (0, 1]; the top-level scan fails.
  const auto p = P({Rational(-26, 100), 1, -1});
  CHECK(certify::reduced_constant(p, 1) > 0);
  const auto c = certify::certify_nonpositive(p, 1);
  CHECK(c.ok());
  CHECK(c.depth > 0);
  CHECK(certify::tiles(c));
  for (const auto& piece : c.intervals) CHECK(piece.reduced_constant <= 0);
}

TEST_CASE("no false positives on random polynomials") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> coef(-40, 40), deg(1, 8), den(1, 9);
  int certified = 0;
  for (int k = 0; k < 1000; ++k) {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) {
      x = Rational(coef(rng), den(rng));
      x.canonicalize();
    }
    // Bias toward nonpositive polynomials so both outcomes occur.
    c[0] -= 20;
    const RationalPoly p(c);
    const Rational dx(den(rng), 10);
    const auto cert = certify::certify_nonpositive(p, dx, 14);
    if (!cert.ok()) continue;
    ++certified;
    CHECK(certify::tiles(cert));
    for (int i = 1; i <= 400; ++i) {
      const Rational x = dx * Rational(i, 400);
      if (poly::eval_exact(p, x) > 0) {
        FAIL("certified polynomial is positive at " << to_string(x));
      }
    }
  }
  CHECK(certified > 100);
  CHECK(certified < 1000);
}

TEST_CASE("lemma polynomials") {
  const auto p1 = lemma::build_interval("P1_acute");
  CHECK(p1.coeffs().at(3).lo() == 2);
  CHECK(p1.coeffs().at(3).hi() == 2);
  // -69 2^(1/3) / (5 pi^(2/3)) = -8.10567...
  CHECK(to_double(p1.coeffs().at(5).lo()) >= -8.10568);
  CHECK(to_double(p1.coeffs().at(5).hi()) <= -8.10566);

  const auto q = lemma::build_upper("Q_mgeq3");
  CHECK(poly::eval_exact(q, 0) == 0);

  const auto m = lemma::build_interval("negP1prime_mono");
  std::vector<int> degrees;
  for (int i = 0; i <= m.degree(); ++i) {
    const auto& c = m.coeffs()[i];
    if (!(c.lo() == 0 && c.hi() == 0)) degrees.push_back(i);
  }
  REQUIRE(!degrees.empty());
  CHECK(degrees.front() == 5);
  CHECK(degrees.back() == 21);
  CHECK(std::find(degrees.begin(), degrees.end(), 6) == degrees.end());

  CHECK_THROWS_AS(lemma::build_upper("P9"), Error);
}

TEST_CASE("upper rounding dominates the family") {
  for (auto name : lemma::lemma_names()) {
    const auto iv = lemma::build_interval(name);
    const auto up = lemma::build_upper(name);
    for (int i = 0; i <= iv.degree(); ++i) CHECK(up.coeff(i) >= iv.coeffs()[i].hi());
  }
}

TEST_CASE("lemma certificates") {
  const auto p2 = lemma::certification_poly("P2_acute", {0, Rational(285, 1000)});
  CHECK(certify::reduced_constant(p2, Rational(285, 1000)) <= 0);
  for (auto name : {"P2_acute", "negP1prime_mono", "Q_mgeq3"}) {
    for (const auto& run : lemma::certify_lemma(name, 40)) {
      CHECK(run.certificate.ok());
      CHECK(run.certificate.depth <= 40);
      CHECK(certify::tiles(run.certificate));
    }
  }
  CHECK(lemma::targets("negP1prime_mono").size() == 2);
}

TEST_CASE("JSON round trip") {
  const auto p = P({Rational(-3, 7), 0, Rational(5, 2)});
  CHECK(poly::from_json(poly::to_json(p)) == p);
  CHECK_THROWS_AS(poly::from_json("[1, 2"), Error);
}

}
