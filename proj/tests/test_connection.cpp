#include <doctest.h>

#include <random>

#include "artifact/connection.hpp"

using namespace artifact;

namespace {

const IS Z = IS::Zero, H = IS::Half, S = IS::Sigma;

Cyclo e_pi_i(const Rational& x) {  // exp(pi i x) for x in (1/8)Z
  Rational k = x * Rational(8);
  REQUIRE(k.to_mpq().get_den() == 1);
  return Cyclo::zeta(static_cast<int>(k.to_mpq().get_num().get_si()));
}

}  // namespace

TEST_SUITE("connection") {
  TEST_CASE("table 7 entries") {
    const Cyclo i = Cyclo::i(), z1 = Cyclo::zeta(-1);
    const Cyclo p = (Cyclo(1) + i) * Rational(1, 2), m = (Cyclo(1) - i) * Rational(1, 2);
    CHECK(single_B(S, S, S, S, Z, Z) == z1 * p);
    CHECK(single_B(S, S, S, S, Z, H) == z1 * m);
    CHECK(single_B(S, S, S, S, H, Z) == z1 * m);
    CHECK(single_B(S, S, S, S, H, H) == z1 * p);
    CHECK(single_B(H, H, H, H, Z, Z) == Cyclo(-1));
    CHECK(single_B(H, H, S, S, Z, S) == i);
    CHECK(single_B(H, S, H, S, S, Z) == i);
    CHECK(single_B(S, H, H, S, S, S) == Cyclo(-1));
    CHECK(single_B(H, S, S, H, S, S) == z1);
    CHECK(single_B(S, H, S, H, S, Z) == i);
    CHECK(single_B(S, S, H, H, Z, S) == i);
    CHECK_THROWS_AS(single_B(S, S, S, S, S, Z), std::invalid_argument);
  }

  TEST_CASE("vacuum lemma") {
    for (IS a : {Z, H, S})
      for (IS b : {Z, H, S})
        for (IS c : {Z, H, S}) {
          // h0 = 0
          for (IS h : intermediates1(Z, a, b, c))
            for (IS hp : intermediates1(Z, b, a, c))
              CHECK(single_B(Z, a, b, c, h, hp) == e_pi_i(is_value(c) - is_value(a) - is_value(b)));
          // h3 = 0
          for (IS h : intermediates1(a, b, c, Z))
            for (IS hp : intermediates1(a, c, b, Z))
              CHECK(single_B(a, b, c, Z, h, hp) == e_pi_i(is_value(a) - is_value(b) - is_value(c)));
          for (IS h : intermediates1(a, Z, b, c))
            for (IS hp : intermediates1(a, b, Z, c)) CHECK(single_B(a, Z, b, c, h, hp) == Cyclo(1));
        }
  }

  TEST_CASE("closed form equals the slot product") {
    long long n = 0;
    for (int len = 1; len <= 2; ++len)
      for (int l = 0; l <= len; ++l) {
        auto all = all_sectors(l, len - l);
        for (const auto& s1 : all)
          for (const auto& s2 : all)
            for (const auto& s3 : all)
              for (const auto& lam : fuse(s2, s3))
                for (const auto& s0 : fuse(s1, lam))
                  for (const auto& lp : intermediates(s0, s2, s1, s3)) {
                    CHECK(multi_B_closed(s0, s1, s2, s3, lam, lp) == multi_B_product(s0, s1, s2, s3, lam, lp));
                    ++n;
                  }
      }
    CHECK(n > 0);
    std::mt19937 rng(5);
    for (int t = 0; t < 2000; ++t) {
      int l = rng() % 7, r = 6 - l;
      auto rnd = [&]() {
        std::vector<IS> lab(6);
        for (auto& x : lab) x = static_cast<IS>(rng() % 3);
        return Sector::from_labels(lab, l);
      };
      Sector s1 = rnd(), s2 = rnd(), s3 = rnd();
      auto f = fuse(s2, s3);
      Sector lam = f[rng() % f.size()];
      auto g = fuse(s1, lam);
      Sector s0 = g[rng() % g.size()];
      auto A = intermediates(s0, s2, s1, s3);
      REQUIRE(!A.empty());
      Sector lp = A[rng() % A.size()];
      CHECK(multi_B_closed(s0, s1, s2, s3, lam, lp) == multi_B_product(s0, s1, s2, s3, lam, lp));
      (void)r;
    }
  }

  TEST_CASE("invalid tuples are rejected") {
    Sector a = Sector::from_labels({S}, 1), v = Sector::vacuum(1, 0);
    CHECK_THROWS_AS(multi_B_closed(v, a, a, a, v, v), std::invalid_argument);
  }
}
