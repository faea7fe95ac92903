// Acceptance run: one PASS/FAIL line per criterion, then informational lines.
#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "artifact/analytic.hpp"
#include "artifact/codecft.hpp"
#include "artifact/connection.hpp"
#include "artifact/framed.hpp"

using namespace artifact;

namespace {

// tolerances
constexpr double kMonodromyTol = 1e-9;
constexpr double kOdeTol = 1e-6;
constexpr double kOdeControl = 1e-2;
constexpr double kCorrTol = 1e-12;
constexpr double kDeformTol = 1e-12;
constexpr double kSigmaTol = 1e-10;
constexpr double kClassifySeconds = 60;
constexpr double kFA4SmallSeconds = 5;
constexpr double kFA4r4Seconds = 120;
constexpr double kConnSeconds = 60;
constexpr double kMonoSeconds = 10;

const IS Z = IS::Zero, H = IS::Half, S = IS::Sigma;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(const std::string& name, const std::string& detail) {
  std::printf("[INFO] %s: %s\n", name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

Code lit(const std::vector<std::string>& ws) {
  std::vector<Word> v;
  for (const auto& s : ws) v.push_back(parse_word(s));
  return Code::from_words(v, v[0].l, 0);
}

long long binom(int n, int k) {
  long long v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

std::map<int, std::vector<Code>> g_codes;

// ---------------------------------------------------------------- 1
void criterion1() {
  auto t0 = Clock::now();
  // Table 1 generators; r = 6 minimal code taken as <111111>
  const std::map<int, std::vector<Code>> table1 = {
      {1, {lit({"1"})}},
      {2, {lit({"11"})}},
      {3, {lit({"111"})}},
      {4, {lit({"1111"}), dual_code(lit({"1111"}))}},
      {5, {lit({"11111"}), lit({"11000", "00111", "01100"})}},
      {6,
       {lit({"111111"}), lit({"110000", "001111", "101000"}), lit({"110000", "001111", "101100"}),
        lit({"110000", "001100", "000011", "101010"}), dual_code(lit({"111111"}))}}};
  const std::map<int, std::vector<long long>> dims_t = {
      {1, {3}}, {2, {10}}, {3, {36}}, {4, {136, 82}}, {5, {528, 276}}, {6, {2080, 1000, 936, 756, 730}}};
  bool ok = true;
  std::string bad;
  for (int r = 1; r <= 6; ++r) {
    g_codes[r] = classify_codes(r);
    const auto& codes = g_codes[r];
    std::set<std::vector<uint32_t>> got, want;
    for (const Code& G : codes) got.insert(G.gens());
    for (const Code& G : table1.at(r)) want.insert(canonical_form(G).gens());
    if (got != want) ok = false, bad += fmt(" r=%d code set differs;", r);
    std::vector<long long> d;
    for (const Code& G : codes) d.push_back(SG(G).size());
    if (d != dims_t.at(r)) ok = false, bad += fmt(" r=%d dims differ;", r);
    // currents: C(r,2) for the minimal code, 0 for the even code when r >= 4
    for (const Code& G : codes) {
      if (G == canonical_form(lit({std::string(r, '1')})) && currents(G) != binom(r, 2))
        ok = false, bad += fmt(" r=%d minimal currents;", r);
      if (r >= 4 && r % 2 == 0 && G == canonical_form(dual_code(lit({std::string(r, '1')}))) && currents(G) != 0)
        ok = false, bad += fmt(" r=%d even currents;", r);
    }
  }
  // current counts in Table 1 order
  const std::map<int, std::vector<long long>> cur_t = {
      {1, {0}}, {2, {1}}, {3, {3}}, {4, {6, 0}}, {5, {10, 1}}, {6, {15, 3, 2, 0, 0}}};
  for (int r = 1; r <= 6; ++r) {
    std::vector<long long> c;
    for (const Code& G : g_codes[r]) c.push_back(currents(G));
    if (c != cur_t.at(r)) ok = false, bad += fmt(" r=%d currents differ;", r);
  }
  // Table 9 enumerators
  using V = std::vector<long long>;
  auto e = [&](const std::vector<std::string>& ws) { return enumerator(canonical_form(lit(ws))); };
  if (e({"110000", "001111", "101000"}) != V{1, 0, 3, 0, 3, 0, 1}) ok = false, bad += " G^{2;1,1} enumerator;";
  if (e({"110000", "001111", "101100"}) != V{1, 0, 1, 4, 1, 0, 1}) ok = false, bad += " G^{2;1,2} enumerator;";
  if (e({"110000", "001100", "000011", "101010"}) != V{1, 0, 3, 8, 3, 0, 1}) ok = false, bad += " E enumerator;";
  for (int r = 1; r <= 6; ++r) {
    V mn(r + 1, 0), ev(r + 1, 0);
    mn[0] = mn[r] = 1;
    for (int k = 0; k <= r; k += 2) ev[k] = binom(r, k);
    if (enumerator(lit({std::string(r, '1')})) != mn) ok = false, bad += " minimal enumerator;";
    if (enumerator(dual_code(lit({std::string(r, '1')}))) != ev) ok = false, bad += " even enumerator;";
  }
  double secs = since(t0);
  if (secs >= kClassifySeconds) ok = false, bad += " too slow;";
  report(1, "Table 1 classification r=1..6", ok,
         fmt("codes/dims/currents/enumerators %s, %.2fs (limit %.0fs)%s", ok ? "match" : "differ", secs,
             kClassifySeconds, bad.c_str()));
}

// ---------------------------------------------------------------- 2
void criterion2() {
  bool ok = true;
  std::string detail;
  double worst_small = 0;
  for (int r = 1; r <= 4; ++r)
    for (const Code& G : g_codes[r]) {
      auto t0 = Clock::now();
      FramedAlgebra A = build_SG(G);
      VerifyOptions opt;
      opt.workers = r == 4 ? 4 : 1;
      auto reps = verify_axioms(A, opt);
      double secs = since(t0);
      bool pass = reps.size() == 4;
      long long triples = 0;
      for (const auto& rep : reps) {
        pass = pass && rep.pass();
        if (rep.axiom == "FA4") triples = rep.checked;
      }
      const double limit = r <= 3 ? kFA4SmallSeconds : kFA4r4Seconds;
      if (r <= 3) worst_small = std::max(worst_small, secs);
      if (secs >= limit) pass = false;
      if (r == 4) detail += fmt(" %s dim %d: %lld FA4 checks %.1fs;", G.str().c_str(), A.size(), triples, secs);
      if (!pass) detail += fmt(" %s FAILED;", G.str().c_str());
      ok = ok && pass;
    }
  report(2, "FA1-FA4 for S_G, r<=4", ok,
         fmt("zero violations%s; r<=3 worst %.2fs (limit %.0fs);%s", ok ? "" : " NOT met", worst_small,
             kFA4SmallSeconds, detail.c_str()));
}

// ---------------------------------------------------------------- 3
void criterion3() {
  auto t0 = Clock::now();
  long long n = 0, bad = 0;
  for (int len = 1; len <= 3; ++len)
    for (int l = 0; l <= len; ++l) {
      auto all = all_sectors(l, len - l);
      for (const auto& s1 : all)
        for (const auto& s2 : all)
          for (const auto& s3 : all)
            for (const auto& lam : fuse(s2, s3))
              for (const auto& s0 : fuse(s1, lam))
                for (const auto& lp : intermediates(s0, s2, s1, s3)) {
                  ++n;
                  if (!(multi_B_closed(s0, s1, s2, s3, lam, lp) == multi_B_product(s0, s1, s2, s3, lam, lp))) ++bad;
                }
    }
  std::mt19937_64 rng(20260601);
  const int kRandom = 100000;
  long long bad_r = 0;
  for (int t = 0; t < kRandom; ++t) {
    int l = static_cast<int>(rng() % 7);
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
    Sector lp = A[rng() % A.size()];
    if (!(multi_B_closed(s0, s1, s2, s3, lam, lp) == multi_B_product(s0, s1, s2, s3, lam, lp))) ++bad_r;
  }
  double secs = since(t0);
  bool ok = bad == 0 && bad_r == 0 && secs < kConnSeconds;
  report(3, "closed connection formula", ok,
         fmt("%lld exhaustive tuples (l+r<=3), %lld mismatches; %d random l+r=6, %lld mismatches; %.2fs", n, bad,
             kRandom, bad_r, secs));
}

// ---------------------------------------------------------------- 4
void criterion4() {
  auto t0 = Clock::now();
  bool ok = true;
  int count = 0;
  std::string bad;
  for (int r = 1; r <= 6; ++r)
    for (const Code& G : g_codes[r]) {
      ++count;
      if (!verify_modular(G)) ok = false, bad += " " + G.str();
    }
  int thetas = 0;
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= n; ++l)
      for (const Sector& s : all_sectors(l, n - l)) {
        CharacterVector e{{s, Cyclo(1)}};
        ++thetas;
        if (!(s_transform(s_transform(e, l, n - l), l, n - l) == e)) ok = false, bad += " S^2 at " + s.str();
      }
  report(4, "modular invariance", ok,
         fmt("S(Z_G) = Z_G exactly for %d codes r<=6; S^2 = 1 on %d theta vectors (l+r<=4); %.2fs%s", count, thetas,
             since(t0), bad.c_str()));
}

// ---------------------------------------------------------------- 5
void criterion5() {
  bool ok = true;
  double worst = 0, slowest = 0;
  int sets = 0;
  std::string bad;
  for (IS a : {Z, H, S})
    for (IS b : {Z, H, S})
      for (IS c : {Z, H, S})
        for (IS d : {Z, H, S}) {
          if (intermediates1(a, b, c, d).empty()) continue;
          auto t0 = Clock::now();
          MonodromyOptions opt;
          opt.steps = 2000;
          auto m = continue_gamma0(a, b, c, d, opt);
          double secs = since(t0);
          ++sets;
          worst = std::max(worst, m.max_abs_err);
          slowest = std::max(slowest, secs);
          if (!(m.max_abs_err < kMonodromyTol) || secs >= kMonoSeconds) {
            ok = false;
            bad += " (" + is_name(a) + "," + is_name(b) + "," + is_name(c) + "," + is_name(d) + ")";
          }
        }
  report(5, "monodromy along gamma_0", ok,
         fmt("%d label sets (Table 7 rows and vacuum rows), max abs err %.2e (tol %.0e), slowest %.3fs%s", sets, worst,
             kMonodromyTol, slowest, bad.c_str()));
}

// ---------------------------------------------------------------- 6
void criterion6() {
  struct RowL {
    IS h0, h1, h2, h3, h;
  };
  const std::vector<RowL> rows = {{S, S, S, S, Z}, {S, S, S, S, H}, {H, H, H, H, Z}, {H, H, S, S, Z}, {H, S, H, S, S},
                                  {S, H, H, S, S}, {H, S, S, H, S}, {S, H, S, H, S}, {S, S, H, H, Z}};
  std::vector<cplx> grid;
  for (int k = 0; k < 20; ++k) grid.push_back(cplx(0.06 + 0.045 * k, 0.12 * std::sin(1.3 * k)));
  bool ok = true;
  double worst = 0, weakest_control = 1e300;
  for (size_t i = 0; i < rows.size(); ++i) {
    const RowL& R = rows[i];
    // control: another row's block under this row's operator. Offsets 1 and 3 are useless here:
    // the two (s)^4 blocks solve the same equation, and the (1/2,s,1/2,s) and (s,1/2,s,1/2) blocks agree at x = 1
    const RowL& W = rows[(i + 2) % rows.size()];
    double ctl_max = 0;
    for (cplx z : grid) {
      if (!in_principal_region(1.0, z)) {
        ok = false;
        continue;
      }
      double res = ode_residual(R.h0, R.h1, R.h2, R.h3, R.h, z);
      worst = std::max(worst, res);
      ctl_max = std::max(ctl_max, ode_residual_of(R.h0, R.h1, R.h2, R.h3, W.h0, W.h1, W.h2, W.h3, W.h, z));
    }
    weakest_control = std::min(weakest_control, ctl_max);
  }
  ok = ok && worst < kOdeTol && weakest_control > kOdeControl;
  report(6, "block ODEs", ok,
         fmt("9 rows x 20 points, max residual %.2e (tol %.0e); wrong-block control, smallest per-row max %.2e "
             "(needs > %.0e)",
             worst, kOdeTol, weakest_control, kOdeControl));
}

// ---------------------------------------------------------------- 7
PointConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3, 3);
  PointConfig p;
  for (auto& z : p.z) z = cplx(u(rng), u(rng));
  return p;
}

void criterion7() {
  std::mt19937_64 rng(7);
  double worst_fg = 0;
  for (int t = 0; t < 100; ++t) {
    PointConfig p = random_config(rng);
    double F2 = F(p) * F(p);
    double G2 = G0123(p) * G0123(p) + G0213(p) * G0213(p) + G0312(p) * G0312(p);
    worst_fg = std::max(worst_fg, std::abs(F2 - G2) / F2);
  }
  // Ising spin four-point sent to z0 = infinity by w = 1/(z - a)
  const Code G = lit({"1"});
  const Word s = parse_word("1|1");
  std::uniform_real_distribution<double> u(-2, 2);
  double worst_intro = 0;
  for (int t = 0; t < 100; ++t) {
    cplx z1(u(rng), u(rng)), z2(u(rng), u(rng)), a(u(rng) + 5, u(rng));
    PointConfig p;
    p.z = {0, 1.0 / (z1 - a), 1.0 / (z2 - a), -1.0 / a};
    double lhs =
        std::pow(std::abs(z1 - a) * std::abs(z2 - a) * std::abs(a), -0.25) * four_point_code(G, {s, s, s, s}, p);
    double rhs = intro_combination(z1, z2);
    worst_intro = std::max(worst_intro, std::abs(lhs - rhs) / rhs);
  }
  cplx z(0.3, 0.1), w(2, 1);
  double sym1 = std::abs(f_ising(z) - f_ising(1.0 - z));
  double sym2 = std::abs(f_ising(w) - std::pow(std::norm(w), 0.25) * f_ising(1.0 / w));
  double measured = std::log(f_ising(w) / f_ising(1.0 / w)) / std::log(std::norm(w));
  bool ok = worst_fg < kCorrTol && worst_intro < kCorrTol && sym1 < kCorrTol && sym2 < kCorrTol;
  report(7, "correlator identities", ok,
         fmt("F^2 = sum G^2 rel err %.1e; four_point_code vs intro_combination rel err %.1e; f(z)-f(1-z) %.1e; "
             "f(z)-(z zbar)^{1/4}f(1/z) %.1e, measured exponent %.12f (tol %.0e)",
             worst_fg, worst_intro, sym1, sym2, measured, kCorrTol));

  // informational: the literal |w|^{1/2} reading
  auto bpz = [](const PointConfig& p) {
    // standard Ising sigma correlator, cross ratio x = z01 z23 / (z02 z13)
    cplx x = (p.z[0] - p.z[1]) * (p.z[2] - p.z[3]) / ((p.z[0] - p.z[2]) * (p.z[1] - p.z[3]));
    double pref = std::pow(std::abs((p.z[0] - p.z[2]) * (p.z[1] - p.z[3]) /
                                    ((p.z[0] - p.z[1]) * (p.z[1] - p.z[2]) * (p.z[2] - p.z[3]) * (p.z[3] - p.z[0]))),
                           0.25);
    cplx r = std::sqrt(1.0 - x);
    return pref * 0.5 * (std::abs(1.0 + r) + std::abs(1.0 - r));
  };
  std::string ratios, lit_ratios;
  for (int t = 0; t < 3; ++t) {
    PointConfig p = random_config(rng);
    double pre = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pre *= std::pow(std::abs(p.z[i] - p.z[j]), -0.25);
    ratios += fmt(" %.6f", 0.5 * pre * F(p) / bpz(p));
    lit_ratios += fmt(" %.6f", 0.5 * pre * F_literal(p) / bpz(p));
  }
  info("F reading", "ratio to the standard Ising form with |z_ij z_kl| terms:" + ratios +
                        "; with literal |.|^{1/2} terms:" + lit_ratios);
  double lit_exp = std::log(f_ising_literal(w) / f_ising_literal(1.0 / w)) / std::log(std::norm(w));
  info("f_Ising literal", fmt("literal form: f(z)-f(1-z) = %.3e, scaling exponent at 2+i = %.6f",
                              std::abs(f_ising_literal(z) - f_ising_literal(1.0 - z)), lit_exp));
  info("block sum", fmt("|C^0|^2+|C^1/2|^2 over intro_combination at (4+i, 2+0.3i) = %.12f (sqrt2 = %.12f)",
                        ising_block_sum(cplx(4, 1), cplx(2, 0.3)) / intro_combination(cplx(4, 1), cplx(2, 0.3)),
                        std::sqrt(2.0)));
}

// ---------------------------------------------------------------- 8
// per-coordinate product form: each coordinate contributes 2 - 2 sum_j s0 sj G_{0j}^2 / F^2
double multinomial_oracle(int r, const std::array<std::vector<int>, 4>& s, const PointConfig& p) {
  const int N = static_cast<int>(s[0].size());
  for (int k = 0; k < N; ++k)
    if (s[0][k] + s[1][k] + s[2][k] + s[3][k] != 0) return 0;
  double f = F(p), g1 = G0123(p), g2 = G0213(p), g3 = G0312(p);
  double v = std::ldexp(1.0, -r) * std::pow(f, r);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) v *= std::pow(std::norm(p.z[i] - p.z[j]), -r / 8.0);
  for (int k = 0; k < N; ++k)
    v *= 2 - 2 * (s[0][k] * s[1][k] * g1 * g1 + s[0][k] * s[2][k] * g2 * g2 + s[0][k] * s[3][k] * g3 * g3) / (f * f);
  return v;
}

Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ();
}

void criterion8() {
  std::mt19937_64 rng(8);
  double worst_id = 0, worst_rot = 0;
  int cases = 0;
  const Code G = lit({"111111"});
  const int r = 6;
  for (int N = 1; N <= 3; ++N)
    for (int t = 0; t < 30; ++t) {
      DeformParams dp;
      dp.N = N;
      dp.sigma = Eigen::MatrixXd::Identity(2 * N, 2 * N);
      for (auto& v : dp.s) v.assign(N, 1);
      // balanced signs per coordinate: two + and two -
      for (int k = 0; k < N; ++k) {
        std::array<int, 4> pat{1, 1, -1, -1};
        std::shuffle(pat.begin(), pat.end(), rng);
        for (int i = 0; i < 4; ++i) dp.s[i][k] = pat[i];
      }
      PointConfig p = random_config(rng);
      double v = deformed_four_point(G, dp, p).real();
      double lemma = average_func(r, N, dp.s, p);
      double oracle = multinomial_oracle(r, dp.s, p);
      worst_id = std::max({worst_id, std::abs(v - lemma) / std::abs(lemma), std::abs(v - oracle) / std::abs(oracle)});
      DeformParams rot = dp;
      rot.sigma.setZero();
      rot.sigma.topLeftCorner(N, N) = random_orthogonal(N, rng);
      rot.sigma.bottomRightCorner(N, N) = random_orthogonal(N, rng);
      worst_rot = std::max(worst_rot, (deform_exponents(rot, r) - deform_exponents(dp, r)).cwiseAbs().maxCoeff());
      ++cases;
    }
  // O(N,N) membership: an exact boost passes, a perturbed one is refused
  DeformParams b;
  b.N = 1;
  b.sigma.resize(2, 2);
  b.sigma << std::cosh(0.3), std::sinh(0.3), std::sinh(0.3), std::cosh(0.3);
  b.s = {std::vector<int>{1}, {1}, {-1}, {-1}};
  bool boost_ok = true, refused = false;
  try {
    b.validate(kSigmaTol);
  } catch (const std::invalid_argument&) {
    boost_ok = false;
  }
  Eigen::Matrix4d E = deform_exponents(b, r);
  double boost_err = std::abs(E(0, 1) - (std::exp(-0.6) / 4 + 0.25 - 0.75));
  DeformParams bad = b;
  bad.sigma(0, 0) += 1e-9;
  try {
    bad.validate(kSigmaTol);
  } catch (const std::invalid_argument&) {
    refused = true;
  }
  bool ok = worst_id < kDeformTol && worst_rot < kDeformTol && boost_ok && refused && boost_err < kDeformTol;
  report(8, "deformed correlator", ok,
         fmt("%d sign/point cases N=1..3 on <111111>: sigma=1 vs average_func rel err %.1e; O(N)xO(N) exponent "
             "shift %.1e; boost exponent err %.1e; off-group sigma (1e-9) %s (tol %.0e)",
             cases, worst_id, worst_rot, boost_err, refused ? "refused" : "ACCEPTED", kSigmaTol));
}

// ---------------------------------------------------------------- 9
void criterion9() {
  bool ok = true;
  int count = 0;
  std::string bad;
  for (int r = 1; r <= 6; ++r)
    for (const Code& G : g_codes[r]) {
      ++count;
      SG S(G);
      const auto N = enumerator(G);
      mpz_class formula = 0;
      for (int w = 0; w <= r; ++w) formula += mpz_class(static_cast<long>(N[w])) << (2 * r - G.dim() - w);
      if (mpz_class(static_cast<long>(S.size())) != formula) ok = false, bad += " total " + G.str();
      std::map<uint32_t, long long> by;
      for (int i = 0; i < S.size(); ++i) ++by[S.d_of(i)];
      for (uint32_t g : G.elements()) {
        uint32_t d = g | (g << r);
        long long want = 1LL << (2 * r - G.dim() - popcount(g));
        if (by[d] != want) ok = false, bad += " per-d " + G.str();
      }
      if (by.size() != static_cast<size_t>(G.size())) ok = false, bad += " extra d " + G.str();
    }
  report(9, "dimension formulas", ok,
         fmt("basis counts = 2^{2r-dim G} P_G(1/2) and per-d counts = 2^{2r-dim G-|d|_l} for %d codes%s", count,
             bad.c_str()));
}

void informational() {
  // associativity identity as a report-only suite
  std::string s;
  for (int r = 1; r <= 2; ++r)
    for (const Code& G : g_codes[r]) {
      FramedAlgebra A = build_SG(G);
      VerifierReport rep = check_associativity(A);
      VerifierReport com = check_commutativity(A);
      s += fmt(" %s assoc %lld/%lld violations, commutativity %s;", G.str().c_str(), rep.violation_count, rep.checked,
               com.pass() ? "ok" : "FAIL");
    }
  FramedAlgebra I = ising_algebra();
  s += fmt(" S_Ising assoc %lld violations", check_associativity(I).violation_count);
  info("associativity (report only)", s);
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  informational();
  std::printf("%s: %d of 9 criteria failed, total %.1fs\n", failures ? "FAIL" : "PASS", failures, since(t0));
  return failures ? 1 : 0;
}
