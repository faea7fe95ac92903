#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>

#include "artifact/analytic.hpp"
#include "artifact/bitcode.hpp"
#include "artifact/codecft.hpp"

using namespace artifact;

namespace {

const IS Z = IS::Zero, H = IS::Half, S = IS::Sigma;

PointConfig random_config(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-3, 3);
  PointConfig p;
  for (auto& z : p.z) z = cplx(u(rng), u(rng));
  return p;
}

Code lit(const std::string& s) { return Code::from_words({parse_word(s)}, static_cast<int>(s.size()), 0); }

Eigen::MatrixXd boost(double lam) {
  Eigen::MatrixXd m(2, 2);
  m << std::cosh(lam), std::sinh(lam), std::sinh(lam), std::cosh(lam);
  return m;
}

}  // namespace

TEST_SUITE("analytic") {
  TEST_CASE("block values") {
    CHECK(std::abs(eval_block(H, H, H, H, Z, 2, 1) - 1.5) < 1e-14);
    double want = 0.5 * std::pow(12.0, -0.125) * (std::sqrt(3.0) + 1.0);
    CHECK(std::abs(eval_block(S, S, S, S, Z, 4, 1) - want) < 1e-14);
    // vacuum: h1 = 0 gives y^{h0-h2-h3}
    cplx y(0.7, 0.2);
    CHECK(std::abs(eval_block(S, Z, H, S, S, 3, y) - std::pow(y, -0.5)) < 1e-14);
    CHECK_THROWS_AS(eval_block(S, S, S, S, Z, 1, 2), BranchError);
    CHECK_THROWS_AS(eval_block(S, S, S, S, Z, -4, 1), BranchError);
    CHECK_THROWS_AS(eval_block(S, S, S, S, S, 4, 1), std::invalid_argument);
  }

  TEST_CASE("(1/16)^4 block against its power series") {
    // C^0(1,z) = (z(1-z))^{-1/8} sum_k binom(1/2, 2k) z^k
    const double z = 0.3;
    auto f = [](double w) { return eval_block(S, S, S, S, Z, 1, w).real(); };
    double s = 0, term = 1;
    for (int k = 0; k < 60; ++k) {
      // binom(1/2, 2k)
      double b = 1;
      for (int j = 0; j < 2 * k; ++j) b *= (0.5 - j) / (j + 1);
      s += b * term;
      term *= z;
    }
    CHECK(std::abs(f(z) - std::pow(z * (1 - z), -0.125) * s) < 1e-12);
  }

  TEST_CASE("ode coefficients match table 4") {
    OdeCoeffs a = ode_coeffs(S, S, S, S);
    CHECK(a.p0 == Rational(3, 4));
    CHECK(a.p1 == Rational(-3, 2));
    CHECK(a.q0 + a.q2 == Rational(-3, 64));
    CHECK(a.q2 == Rational(0));
    OdeCoeffs b = ode_coeffs(H, H, H, H);
    CHECK(b.p0 == Rational(4, 3));
    CHECK(b.p1 == Rational(-8, 3));
    CHECK(b.q0 == Rational(-2, 3));
    CHECK(b.q2 == Rational(0));
    OdeCoeffs c = ode_coeffs(H, H, S, S);
    CHECK(c.p1 == Rational(-3, 2));
    CHECK(c.q0 == Rational(-3, 64));
    CHECK(c.q2 == Rational(-21, 64));
    OdeCoeffs d = ode_coeffs(H, S, H, S);
    CHECK(d.p1 == Rational(-3, 2));
    CHECK(d.q0 == Rational(-3, 8));
    CHECK(d.q2 == Rational(0));
    OdeCoeffs e = ode_coeffs(S, H, H, S);
    CHECK(e.p1 == Rational(-13, 4));
    CHECK(e.q0 == Rational(-3, 8));
    CHECK(e.q2 == Rational(7, 8));
    OdeCoeffs f = ode_coeffs(H, S, S, H);
    CHECK(f.p1 == Rational(-11, 12));
    CHECK(f.q0 == Rational(-16, 192));
    CHECK(f.q2 == Rational(-21, 192));
    OdeCoeffs g = ode_coeffs(S, H, S, H);
    CHECK(g.p1 == Rational(-8, 3));
    CHECK(g.q0 + g.q2 == Rational(-1, 12));
    CHECK_THROWS_AS(ode_coeffs(S, S, S, Z), std::invalid_argument);
  }

  TEST_CASE("ode residuals") {
    CHECK(ode_residual(S, S, S, S, Z, 0.3) < 1e-6);
    CHECK(ode_residual(H, H, H, H, Z, 0.5) < 1e-8);
    CHECK(ode_residual_of(H, H, H, H, S, S, S, S, Z, 0.5) > 1e-2);
  }

  TEST_CASE("monodromy") {
    auto m = continue_gamma0(H, H, H, H);
    CHECK(std::abs(m.recovered(0, 0) - cplx(-1, 0)) < 1e-9);
    auto s = continue_gamma0(S, S, S, S);
    REQUIRE(s.recovered.rows() == 2);
    cplx z = std::polar(1.0, -M_PI / 8);
    cplx p(0.5, 0.5), q(0.5, -0.5);
    CHECK(std::abs(s.recovered(0, 0) - z * p) < 1e-9);
    CHECK(std::abs(s.recovered(0, 1) - z * q) < 1e-9);
    CHECK(std::abs(s.recovered(1, 0) - z * q) < 1e-9);
    CHECK(std::abs(s.recovered(1, 1) - z * p) < 1e-9);
    auto t = continue_gamma0(H, S, S, H);
    CHECK(std::abs(t.recovered(0, 0) - z) < 1e-9);
    CHECK(s.max_abs_err < 1e-9);
    MonodromyOptions opt;
    opt.seed = 99;
    CHECK(continue_gamma0(S, S, S, S, opt).max_abs_err < 1e-9);
  }

  TEST_CASE("F and G") {
    std::mt19937 rng(1);
    for (int t = 0; t < 100; ++t) {
      PointConfig p = random_config(rng);
      double F2 = F(p) * F(p);
      double G2 = G0123(p) * G0123(p) + G0213(p) * G0213(p) + G0312(p) * G0312(p);
      CHECK(std::abs(F2 - G2) <= 1e-12 * F2);
    }
    PointConfig bad;
    bad.z = {0, 1, 1, 2};
    CHECK_THROWS_AS(F(bad), std::invalid_argument);
  }

  TEST_CASE("four_point_code") {
    Code G = lit("1");
    Word s = parse_word("1|1");
    PointConfig p;
    p.z = {0, 1, 2, 3};
    double v = four_point_code(G, {s, s, s, s}, p);
    CHECK(v > 0);
    double pre = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pre *= std::pow(std::abs(p.z[i] - p.z[j]), -0.25);
    CHECK(std::abs(v - 0.5 * pre * F(p)) < 1e-14);
    Word o = parse_word("0|0");
    CHECK(four_point_code(G, {s, s, s, o}, p) == 0);
    CHECK_THROWS_AS(four_point_code(G, {parse_word("1|0"), s, s, s}, p), std::invalid_argument);
    // permutation symmetry
    Code G3 = lit("111");
    std::mt19937 rng(2);
    Word a = parse_word("111|111"), b = parse_word("000|000");
    std::array<Word, 4> d{a, a, b, b};
    for (int t = 0; t < 20; ++t) {
      PointConfig q = random_config(rng);
      std::array<int, 4> perm{0, 1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      PointConfig q2;
      std::array<Word, 4> d2;
      for (int i = 0; i < 4; ++i) {
        q2.z[i] = q.z[perm[i]];
        d2[i] = d[perm[i]];
      }
      double x = four_point_code(G3, d, q), y = four_point_code(G3, d2, q2);
      CHECK(std::abs(x - y) <= 1e-10 * std::abs(x));
    }
  }

  TEST_CASE("intro combination via the map z -> 1/(z - a)") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> u(-2, 2);
    Code G = lit("1");
    Word s = parse_word("1|1");
    for (int t = 0; t < 50; ++t) {
      cplx z1(u(rng), u(rng)), z2(u(rng), u(rng)), a(u(rng) + 5, u(rng));
      PointConfig p;
      p.z = {0, 1.0 / (z1 - a), 1.0 / (z2 - a), 1.0 / (0.0 - a)};
      double lhs = std::pow(std::abs(z1 - a) * std::abs(z2 - a) * std::abs(a), -0.25) *
                   four_point_code(G, {s, s, s, s}, p);
      double rhs = intro_combination(z1, z2);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    }
    // the block combination is sqrt2 times the printed closed form
    cplx x(4, 1), y(2, 0.3);
    CHECK(std::abs(ising_block_sum(x, y) - std::sqrt(2.0) * intro_combination(x, y)) < 1e-12);
  }

  TEST_CASE("four_point_C") {
    Code G = lit("11");
    PointConfig p;
    p.z = {cplx(0.1, 0.2), cplx(1.3, -0.4), cplx(-0.7, 1.1), cplx(2.2, 0.9)};
    std::array<Word, 4> ones4;
    ones4.fill(parse_word("11|11"));
    CHECK(std::abs(four_point_C(G, {0, 0, 0, 0}, p).real() - four_point_code(G, ones4, p)) < 1e-14);
    CHECK(four_point_C(G, {3, 0, 0, 0}, p) == cplx(0));
    // alpha = (11, 11, 00, 00): |a0a1 + a2a3| = 2, the other exponents 0, F^0
    Cocycle eps(2);
    double pre = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pre *= std::pow(std::norm(p.z[i] - p.z[j]), -0.25);
    double want = eps.epsilon(3u, 3u) * 0.25 * pre * G0123(p) * G0123(p);
    CHECK(std::abs(four_point_C(G, {3, 3, 0, 0}, p).real() - want) < 1e-14);
    // alpha = (11, 00, 11, 00): G_{02,13}^2 and the sign (-1)^{|a1 a3|} = 1
    double want2 = eps.epsilon(3u, 0u) * eps.epsilon(3u, 3u) * 0.25 * pre * G0213(p) * G0213(p);
    CHECK(std::abs(four_point_C(G, {3, 0, 3, 0}, p).real() - want2) < 1e-14);
    CHECK_THROWS_AS(four_point_C(G, {1, 1, 0, 0}, p), std::invalid_argument);
  }

  TEST_CASE("deformation") {
    Code G = lit("111111");
    PointConfig p;
    p.z = {cplx(0.3, 0.1), cplx(1.2, -0.5), cplx(-0.8, 0.9), cplx(2.0, 1.4)};
    DeformParams dp;
    dp.N = 2;
    dp.sigma = Eigen::MatrixXd::Identity(4, 4);
    dp.s = {std::vector<int>{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    const int r = 6;
    double base = average_func(r, 2, dp.s, p);
    CHECK(std::abs(deformed_four_point(G, dp, p).real() - base) <= 1e-12 * std::abs(base));
    // O(N) x O(N)
    DeformParams rot = dp;
    double th = 0.7, ph = -1.1;
    rot.sigma.setZero();
    rot.sigma.block(0, 0, 2, 2) << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    rot.sigma.block(2, 2, 2, 2) << std::cos(ph), std::sin(ph), -std::sin(ph), std::cos(ph);
    CHECK((deform_exponents(rot, r) - deform_exponents(dp, r)).cwiseAbs().maxCoeff() < 1e-12);
    // boost: sigma^{-1}(1,1) = e^{-lambda}(1,1)
    DeformParams b;
    b.N = 1;
    b.sigma = boost(0.3);
    b.s = {std::vector<int>{1}, {1}, {-1}, {-1}};
    Eigen::Matrix4d E = deform_exponents(b, r);
    const double k = std::exp(-0.6) / 4;
    CHECK(std::abs(E(0, 1) - (k + 0.25 - 0.75)) < 1e-14);
    CHECK(std::abs(E(0, 2) - (-k + 0.25 - 0.75)) < 1e-14);
    // not in O(N,N)
    DeformParams bad = b;
    bad.sigma(0, 1) += 1e-6;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    DeformParams big = dp;
    big.N = 4;
    big.sigma = Eigen::MatrixXd::Identity(8, 8);
    big.s = {std::vector<int>(4, 1), std::vector<int>(4, 1), std::vector<int>(4, -1), std::vector<int>(4, -1)};
    CHECK_THROWS_AS(deformed_four_point(G, big, p), std::invalid_argument);
    // unbalanced signs
    DeformParams un = b;
    un.s = {std::vector<int>{1}, {1}, {1}, {-1}};
    CHECK(deformed_four_point(G, un, p) == cplx(0));
  }

  TEST_CASE("f_Ising") {
    cplx z(0.3, 0.1);
    CHECK(std::abs(f_ising(z) - f_ising(1.0 - z)) < 1e-12);
    cplx w(2, 1);
    CHECK(std::abs(f_ising(w) - std::pow(std::norm(w), 0.25) * f_ising(1.0 / w)) < 1e-12);
    CHECK_THROWS_AS(f_ising(0), std::invalid_argument);
    auto s = f_ising_series(2);
    // the printed expansion, halved
    std::map<SeriesKey, Rational> want = {
        {{0, 0, 0}, Rational(1)},      {{1, 0, 0}, Rational(1, 4)},    {{0, 1, 0}, Rational(-1, 8)},
        {{0, 0, 1}, Rational(-1, 8)},  {{1, 1, 0}, Rational(1, 32)},   {{1, 0, 1}, Rational(1, 32)},
        {{0, 1, 1}, Rational(1, 64)},  {{0, 2, 0}, Rational(-5, 128)}, {{0, 0, 2}, Rational(-5, 128)}};
    CHECK(s == want);
    auto s8 = f_ising_series(8);
    for (cplx q : {cplx(0.01, 0.02), cplx(-0.03, 0.01)}) CHECK(std::abs(eval_series(s8, q) - f_ising(q)) < 1e-12);
  }
}
