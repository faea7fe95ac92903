#include <doctest.h>

#include <map>

#include "artifact/codecft.hpp"

using namespace artifact;

namespace {

Code lit(const std::vector<std::string>& ws) {
  std::vector<Word> v;
  for (const auto& s : ws) v.push_back(parse_word(s));
  return Code::from_words(v, v[0].l, 0);
}

long long ipow(long long b, int e) {
  long long v = 1;
  while (e--) v *= b;
  return v;
}

// coefficients of prod_{n>=1} (1 + q^{n - shift/2}) in powers of q^{1/2}, shift in {0, 1}
std::vector<long long> fermion(int shift, int M) {
  std::vector<long long> P(M, 0);
  P[0] = 1;
  for (int n = 1; 2 * n - shift < M; ++n) {
    int e = 2 * n - shift;
    for (int k = M - 1; k >= e; --k) P[k] += P[k - e];
  }
  return P;
}

}  // namespace

TEST_SUITE("codecft") {
  TEST_CASE("cocycle constraints") {
    // eps(a,a) = (-1)^{W(a)/2} and eps(a,b) eps(b,a) = (-1)^{|ab|} on even words
    auto constraints_hold = [](int r, auto&& eps) {
      const uint32_t m = low_mask(2 * r);
      for (uint32_t a = 0; a <= m; ++a) {
        if (popcount(a) % 2) continue;
        if (eps(a, a) != (((signed_wt(a, r) / 2) % 2 == 0) ? 1 : -1)) return false;
        for (uint32_t b = 0; b <= m; ++b) {
          if (popcount(b) % 2) continue;
          if (eps(a, b) * eps(b, a) != (popcount(a & b) % 2 ? -1 : 1)) return false;
        }
      }
      return true;
    };
    for (int r = 1; r <= 4; ++r) {
      Cocycle c(r);
      CHECK(constraints_hold(r, [&](uint32_t a, uint32_t b) { return c.epsilon(a, b); }));
      // bilinearity
      const uint32_t m = low_mask(2 * r);
      for (uint32_t a = 0; a <= m; a += 3)
        for (uint32_t b = 0; b <= m; b += 5)
          for (uint32_t x = 0; x <= m; x += 7) {
            if (popcount(a) % 2 || popcount(b) % 2 || popcount(x) % 2) continue;
            CHECK(c.epsilon(a ^ b, x) == c.epsilon(a, x) * c.epsilon(b, x));
          }
    }
    // r = 2: every bilinear form on the rank-3 lattice satisfying both constraints has the
    // same symmetric part as the transcribed one
    Cocycle c(2);
    const int k = c.rank();
    int solutions = 0;
    for (uint32_t bits = 0; bits < (1u << (k * k)); ++bits) {
      auto eps = [&](uint32_t a, uint32_t b) {
        uint32_t ca = c.coords(a), cb = c.coords(b);
        int t = 0;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (((ca >> i) & 1) && ((cb >> j) & 1) && ((bits >> (i * k + j)) & 1)) t ^= 1;
        return t ? -1 : 1;
      };
      if (!constraints_hold(2, eps)) continue;
      ++solutions;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) {
          bool bij = (bits >> (i * k + j)) & 1, bji = (bits >> (j * k + i)) & 1;
          if (i == j)
            CHECK(bij == c.entry(i, i));
          else
            CHECK((bij ^ bji) == (c.entry(i, j) ^ c.entry(j, i)));
        }
    }
    CHECK(solutions == 8);  // free choice of the strict upper triangle
    for (int r = 5; r <= 6; ++r) {
      Cocycle cc(r);
      for (int i = 0; i < cc.rank(); ++i) {
        uint32_t v = cc.basis()[i];
        CHECK(cc.epsilon(v, v) == (((signed_wt(v, r) / 2) % 2 == 0) ? 1 : -1));
        for (int j = 0; j < cc.rank(); ++j) {
          uint32_t w = cc.basis()[j];
          CHECK(cc.epsilon(v, w) * cc.epsilon(w, v) == (popcount(v & w) % 2 ? -1 : 1));
        }
      }
    }
  }

  TEST_CASE("table 1 classification") {
    const std::map<int, std::vector<long long>> dims_t = {
        {1, {3}}, {2, {10}}, {3, {36}}, {4, {136, 82}}, {5, {528, 276}}, {6, {2080, 1000, 936, 756, 730}}};
    const std::map<int, std::vector<long long>> cur_t = {
        {1, {0}}, {2, {1}}, {3, {3}}, {4, {6, 0}}, {5, {10, 1}}, {6, {15, 3, 2, 0, 0}}};
    for (int r = 1; r <= 5; ++r) {
      auto codes = classify_codes(r);
      std::vector<long long> d, c;
      for (const Code& G : codes) {
        d.push_back(build_SG(G).size());
        c.push_back(currents(G));
      }
      CHECK(d == dims_t.at(r));
      CHECK(c == cur_t.at(r));
    }
    auto c5 = classify_codes(5);
    CHECK(c5[0] == canonical_form(lit({"11111"})));
    CHECK(c5[1] == canonical_form(lit({"11000", "00111", "01100"})));
    auto c4 = classify_codes(4);
    CHECK(c4[1] == canonical_form(dual_code(lit({"1111"}))));
  }

  TEST_CASE("dimension formulas") {
    for (int r = 1; r <= 4; ++r)
      for (const Code& G : classify_codes(r)) {
        SG S(G);
        Dims D = dims(G);
        CHECK(D.total == S.size());
        CHECK(D.total == D.from_enumerator);
        std::map<uint32_t, long long> by;
        for (int i = 0; i < S.size(); ++i) ++by[S.d_of(i)];
        CHECK(by == D.by_d);
      }
    CHECK(dims(lit({"10", "01"})).total == 9);
    CHECK(dims(lit({"100", "010", "001"})).total == 27);
    CHECK(dims(lit({"100", "011"})).total == 30);
    for (int r = 1; r <= 7; ++r) CHECK(dims(lit({std::string(r, '1')})).total == ipow(2, r - 1) * (ipow(2, r) + 1));
    for (int r = 2; r <= 8; r += 2) CHECK(dims(dual_code(lit({std::string(r, '1')}))).total == ipow(3, r) + 1);
  }

  TEST_CASE("structure codes of S_G") {
    for (int r = 1; r <= 3; ++r)
      for (const Code& G : classify_codes(r)) {
        StructureCodes sc = structure_codes(build_SG(G));
        CHECK(sc.D == delta_code(G));
        CHECK(sc.C == dual_code(delta_code(G)));
        CHECK(sc.even_ok);
      }
  }

  TEST_CASE("S_G satisfies the axioms for small codes") {
    for (int r = 1; r <= 2; ++r)
      for (const Code& G : classify_codes(r))
        for (const auto& rep : verify_axioms(build_SG(G))) CHECK_MESSAGE(rep.pass(), G.str(), " ", rep.axiom);
    CHECK_THROWS_AS(SG(lit({"10"})), std::invalid_argument);
  }

  TEST_CASE("characters and modular invariance") {
    for (int r = 1; r <= 4; ++r)
      for (const Code& G : classify_codes(r)) {
        CHECK(character(SG(G)) == character_formula(G));
        CHECK(verify_modular(G));
      }
    // a lone vacuum is not invariant
    CharacterVector Z{{Sector::vacuum(1, 1), Cyclo(1)}};
    CHECK_FALSE(s_transform(Z, 1, 1) == Z);
    // S^2 = 1 on each theta
    for (int n = 1; n <= 2; ++n)
      for (int l = 0; l <= n; ++l)
        for (const Sector& s : all_sectors(l, n - l)) {
          CharacterVector e{{s, Cyclo(1)}};
          CHECK(s_transform(s_transform(e, l, n - l), l, n - l) == e);
        }
    // the general coefficient path agrees with the sqrt2 path
    CharacterVector W{{Sector::vacuum(1, 0), Cyclo::zeta(1)}};
    CharacterVector W2 = s_transform(s_transform(W, 1, 0), 1, 0);
    CHECK(W2 == W);
  }

  TEST_CASE("q characters") {
    QSeries c0 = q_character(IS::Zero, 30), ch = q_character(IS::Half, 30), cs = q_character(IS::Sigma, 30);
    CHECK(c0.leading == Rational(-1, 48));
    CHECK(ch.leading == Rational(23, 48));
    CHECK(cs.leading == Rational(1, 24));
    auto P = fermion(1, 61);
    auto Q = fermion(0, 61);
    for (int k = 0; k < 30; ++k) {
      CHECK(c0.coeffs[k] == P[2 * k]);
      CHECK(ch.coeffs[k] == P[2 * k + 1]);
      CHECK(cs.coeffs[k] == Q[2 * k]);
    }
  }
}
