#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "artifact/cyclo.hpp"
#include "artifact/rational.hpp"

using namespace artifact;

namespace {

std::complex<double> zeta_num(int k) { return std::polar(1.0, M_PI * k / 8); }

Cyclo random_cyclo(std::mt19937& rng) {
  std::array<Rational, 8> c;
  for (auto& x : c) x = Rational(static_cast<long long>(rng() % 21) - 10, 1 + rng() % 4);
  return Cyclo(c);
}

}  // namespace

TEST_SUITE("cyclo") {
  TEST_CASE("rational arithmetic and promotion") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((a - b).str() == "1/6");
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK_THROWS(Rational(1, 0));
    // grow past 64 bits and back
    Rational big(1);
    for (int i = 0; i < 100; ++i) big = big * Rational(3);
    Rational back = big;
    for (int i = 0; i < 100; ++i) back = back / Rational(3);
    CHECK(back == Rational(1));
    CHECK(big.to_mpq() == mpq_class(mpz_class("515377520732011331036461129765621272702107522001")));
  }

  TEST_CASE("roots of unity") {
    CHECK(Cyclo::zeta(16) == Cyclo(1));
    CHECK(Cyclo::zeta(8) == Cyclo(-1));
    CHECK(Cyclo::zeta(-3) == Cyclo::zeta(13));
    CHECK(Cyclo::i() * Cyclo::i() == Cyclo(-1));
    CHECK(Cyclo::sqrt2() * Cyclo::sqrt2() == Cyclo(2));
    CHECK(Cyclo::sqrt2() * Cyclo::inv_sqrt2() == Cyclo(1));
    for (int k = -20; k < 20; ++k) CHECK(std::abs(Cyclo::zeta(k).to_complex() - zeta_num(k)) < 1e-14);
    CHECK(Cyclo::ipow(-1) == Cyclo::zeta(12));
  }

  TEST_CASE("ring laws, conjugation, galois and inverse on random elements") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
      Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
      CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-12);
      CHECK((a * b).galois(3) == a.galois(3) * b.galois(3));
      CHECK(a.galois(15) == a.conj());
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1));
      CHECK(parse_cyclo(a.str()) == a);
      CHECK(a.times_zeta(5) == a * Cyclo::zeta(5));
      CHECK(a.pow(3) == a * a * a);
    }
    CHECK_THROWS_AS(Cyclo().inverse(), std::domain_error);
    CHECK_THROWS_AS(parse_cyclo("(1, 2, x)"), std::invalid_argument);
  }
}
