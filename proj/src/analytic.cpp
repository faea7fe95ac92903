#include "artifact/analytic.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "artifact/codecft.hpp"
#include "artifact/connection.hpp"

namespace artifact {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kArgMargin = 1e-6;
constexpr uint64_t kDefaultSeed = 0x5eed1e55ULL;

double hv(IS h) { return is_value(h).to_double(); }

// Principal powers, with the branch guard.
struct Principal {
  cplx operator()(int, cplx base, double p) const {
    if (std::abs(base) == 0) throw BranchError("radicand vanishes");
    if (std::abs(std::arg(base)) > kPi - kArgMargin) throw BranchError("radicand on the negative real axis");
    return std::exp(p * std::log(base));
  }
};

// Powers with a continuous argument per radicand id.
struct Tracker {
  std::vector<double> arg, pend;
  std::vector<char> seen;
  double maxd = 0;

  explicit Tracker(int n = 16) : arg(n, 0), pend(n, 0), seen(n, 0) {}
  cplx operator()(int id, cplx base, double p) {
    double a = std::arg(base);
    if (seen[id]) {
      a += 2 * kPi * std::round((arg[id] - a) / (2 * kPi));
      maxd = std::max(maxd, std::abs(a - arg[id]));
    }
    pend[id] = a;
    return std::exp(p * cplx(std::log(std::abs(base)), a));
  }
  void start() { maxd = 0; }
  void commit() {
    arg = pend;
    std::fill(seen.begin(), seen.end(), 1);
  }
};

enum class Row { None, S4, H4, HHSS, HSHS, SHHS, HSSH, SHSH, SSHH, Vac };

Row row_of(IS h0, IS h1, IS h2, IS h3, IS h) {
  bool ok = false;
  for (IS m : intermediates1(h0, h1, h2, h3)) ok = ok || m == h;
  if (!ok) return Row::None;
  if (h0 == IS::Zero || h1 == IS::Zero || h2 == IS::Zero || h3 == IS::Zero) return Row::Vac;
  const IS H = IS::Half, S = IS::Sigma;
  std::array<IS, 4> t{h0, h1, h2, h3};
  if (t == std::array<IS, 4>{S, S, S, S}) return Row::S4;
  if (t == std::array<IS, 4>{H, H, H, H}) return Row::H4;
  if (t == std::array<IS, 4>{H, H, S, S}) return Row::HHSS;
  if (t == std::array<IS, 4>{H, S, H, S}) return Row::HSHS;
  if (t == std::array<IS, 4>{S, H, H, S}) return Row::SHHS;
  if (t == std::array<IS, 4>{H, S, S, H}) return Row::HSSH;
  if (t == std::array<IS, 4>{S, H, S, H}) return Row::SHSH;
  if (t == std::array<IS, 4>{S, S, H, H}) return Row::SSHH;
  return Row::None;
}

template <class Pow>
cplx block_expr(IS h0, IS h1, IS h2, IS h3, IS h, cplx x, cplx y, Pow& pw) {
  Row row = row_of(h0, h1, h2, h3, h);
  const cplx xy = x - y;
  switch (row) {
    case Row::S4: {
      cplx sx = pw(0, x, 0.5), sy = pw(1, y, 0.5);
      cplx P = pw(2, x * y * xy, -0.125);
      cplx A = pw(3, sx + sy, 0.5), B = pw(4, sx - sy, 0.5);
      return 0.5 * P * (h == IS::Zero ? A + B : A - B);
    }
    case Row::H4:
      return (x * x - x * y + y * y) / (x * y * xy);
    case Row::HHSS:
      return pw(5, y, -0.125) * pw(6, x * xy, -0.5) * (x - y / 2.0);
    case Row::HSHS:
      return 0.5 * pw(7, x, -0.125) * pw(8, y * xy, -0.5) * (x - 2.0 * y);
    case Row::SHHS:
      return 0.5 * pw(9, x * y, -0.5) / xy * (x + y);
    case Row::HSSH:
      return 0.5 * pw(9, x * y, -0.5) * pw(10, xy, -0.125) * (x + y);
    case Row::SHSH:
      return 0.5 / x * pw(8, y * xy, -0.5) * (x - 2.0 * y);
    case Row::SSHH:
      return pw(6, x * xy, -0.5) / y * (x - y / 2.0);
    case Row::Vac: {
      double a0 = hv(h0), a1 = hv(h1), a2 = hv(h2), a3 = hv(h3);
      double ex = 0, ey = 0, ez = 0;
      if (h0 == IS::Zero) {
        ex = a2 - a1 - a3;
        ey = a1 - a2 - a3;
        ez = a3 - a1 - a2;
      } else if (h1 == IS::Zero) {
        ey = a0 - a2 - a3;
      } else if (h2 == IS::Zero) {
        ex = a0 - a1 - a3;
      } else {
        ez = a0 - a1 - a2;
      }
      cplx v = 1;
      if (ex != 0) v *= pw(11, x, ex);
      if (ey != 0) v *= pw(12, y, ey);
      if (ez != 0) v *= pw(13, xy, ez);
      return v;
    }
    case Row::None:
      break;
  }
  throw std::invalid_argument("no block for labels (" + is_name(h0) + "," + is_name(h1) + "," + is_name(h2) + "," +
                              is_name(h3) + ") h=" + is_name(h));
}

}  // namespace

bool in_principal_region(cplx x, cplx y) {
  if (!(std::abs(x) > std::abs(y))) return false;
  if (std::abs(y) == 0) return false;
  for (cplx w : {x, y, x - y, x * y, x * (x - y), y * (x - y), x * y * (x - y)})
    if (std::abs(std::arg(w)) > kPi - kArgMargin) return false;
  return (std::sqrt(x) - std::sqrt(y)).real() > 0;
}

bool has_block(IS h0, IS h1, IS h2, IS h3, IS h) { return row_of(h0, h1, h2, h3, h) != Row::None; }

cplx eval_block(IS h0, IS h1, IS h2, IS h3, IS h, cplx x, cplx y) {
  if (!in_principal_region(x, y)) throw BranchError("point outside the principal region");
  Principal pw;
  return block_expr(h0, h1, h2, h3, h, x, y, pw);
}

OdeCoeffs ode_coeffs(IS h0, IS h1, IS h2, IS h3) {
  Rational a;
  if (h3 == IS::Half)
    a = Rational(4, 3);
  else if (h3 == IS::Sigma)
    a = Rational(3, 4);
  else
    throw std::invalid_argument("block ODE needs h3 in {1/2, 1/16}");
  Rational ht = is_value(h0) - is_value(h1) - is_value(h2) - is_value(h3);
  OdeCoeffs c;
  c.p0 = a;
  c.p1 = ht * Rational(2) - Rational(2) + a;
  c.q2 = ht * (a + ht - Rational(1)) - a * is_value(h1);
  c.q0 = -(a * is_value(h2));
  return c;
}

double ode_residual_of(IS h0, IS h1, IS h2, IS h3, IS bh0, IS bh1, IS bh2, IS bh3, IS bh, cplx z) {
  OdeCoeffs k = ode_coeffs(h0, h1, h2, h3);
  auto f = [&](cplx w) { return eval_block(bh0, bh1, bh2, bh3, bh, cplx(1, 0), w); };
  // step relative to the distance from the nearest singular point
  double s = 1e-3 * std::min(std::abs(z), std::abs(1.0 - z));
  cplx fm2 = f(z - 2 * s), fm1 = f(z - s), f0 = f(z), fp1 = f(z + s), fp2 = f(z + 2 * s);
  cplx d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12 * s);
  cplx d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12 * s * s);
  double p0 = k.p0.to_double(), p1 = k.p1.to_double(), q0 = k.q0.to_double(), q2 = k.q2.to_double();
  cplx zz = z * (1.0 - z);
  cplx res = zz * d2 + (p0 + p1 * z) * d1 + (q0 + q2 * z * z) / zz * f0;
  return std::abs(res);
}

double ode_residual(IS h0, IS h1, IS h2, IS h3, IS h, cplx z) {
  return ode_residual_of(h0, h1, h2, h3, h0, h1, h2, h3, h, z);
}

MonodromyResult continue_gamma0(IS h0, IS h1, IS h2, IS h3, const MonodromyOptions& opt) {
  MonodromyResult out;
  out.labels = {h0, h1, h2, h3};
  out.rows = intermediates1(h0, h1, h2, h3);
  out.cols = intermediates1(h0, h2, h1, h3);
  if (out.rows.empty() || out.cols.empty()) throw std::invalid_argument("label set has no intermediate states");
  if (opt.steps < 1 || opt.probes < 1) throw std::invalid_argument("steps and probes must be positive");

  uint64_t seed = opt.seed;
  if (seed == 0) {
    const char* env = std::getenv("FRAMED_FORGE_SEED");
    seed = env ? std::stoull(env) : kDefaultSeed;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  const cplx x0(4, 1), y0(2, 0);
  std::vector<std::pair<cplx, cplx>> probes;
  for (int tries = 0; static_cast<int>(probes.size()) < opt.probes; ++tries) {
    if (tries > 100000) throw std::runtime_error("could not place probes");
    cplx x = x0 + 0.4 * cplx(u(rng), u(rng)), y = y0 + 0.4 * cplx(u(rng), u(rng));
    if (in_principal_region(x, y)) probes.push_back({x, y});
  }

  const int nr = static_cast<int>(out.rows.size()), nc = static_cast<int>(out.cols.size());
  const int np = static_cast<int>(probes.size());
  Eigen::MatrixXcd M(np, nc), V(np, nr);
  int total_steps = 0;
  for (int k = 0; k < np; ++k) {
    auto [x, y] = probes[k];
    for (int j = 0; j < nc; ++j) M(k, j) = eval_block(h0, h2, h1, h3, out.cols[j], x, y);
    const cplx m = (x + y) / 2.0, dlt = (x - y) / 2.0;
    for (int i = 0; i < nr; ++i) {
      Tracker tr;
      tr.start();
      block_expr(h0, h1, h2, h3, out.rows[i], x, y, tr);
      tr.commit();
      const double base = 1.0 / opt.steps;
      double t = 0, dt = base;
      cplx val;
      while (t < 1) {
        double tn = std::min(1.0, t + dt);
        cplx e = std::exp(cplx(0, kPi * tn));
        tr.start();
        val = block_expr(h0, h1, h2, h3, out.rows[i], m + e * dlt, m - e * dlt, tr);
        if (tr.maxd > kPi / 4) {
          dt /= 2;
          if (dt < 1e-12) throw std::runtime_error("step halving did not converge");
          continue;
        }
        tr.commit();
        t = tn;
        dt = base;
        ++total_steps;
      }
      V(k, i) = val;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-10 * sv(0)) throw std::runtime_error("ill-conditioned probe system");
  Eigen::MatrixXcd X = M.colPivHouseholderQr().solve(V);  // nc x nr
  out.recovered = X.transpose();
  out.lsq_residual = (M * X - V).cwiseAbs().maxCoeff();
  out.steps_taken = total_steps;
  out.expected.resize(nr, nc);
  double err = 0;
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) {
      out.expected(i, j) = single_B(h0, h1, h2, h3, out.rows[i], out.cols[j]).to_complex();
      err = std::max(err, std::abs(out.expected(i, j) - out.recovered(i, j)));
    }
  out.max_abs_err = err;
  return out;
}

void PointConfig::validate() const {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag()))
        throw std::invalid_argument("points must be finite");
      if (std::abs(z[i] - z[j]) < 1e-6) throw std::invalid_argument("points closer than 1e-6");
    }
}

namespace {

double dist(const PointConfig& p, int i, int j) { return std::abs(p.z[i] - p.z[j]); }

std::array<double, 3> cross_terms(const PointConfig& p) {
  p.validate();
  return {dist(p, 0, 1) * dist(p, 2, 3), dist(p, 0, 2) * dist(p, 1, 3), dist(p, 0, 3) * dist(p, 1, 2)};
}

// Ptolemy keeps the radicands nonnegative; clamp rounding noise.
double root(double v) { return std::sqrt(std::max(v, 0.0)); }

double pair_prefactor(const PointConfig& p, const std::array<std::array<double, 4>, 4>& e) {
  double v = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) v *= std::pow(dist(p, i, j) * dist(p, i, j), e[i][j]);
  return v;
}

}  // namespace

double F(const PointConfig& p) {
  auto [a, b, c] = cross_terms(p);
  return root(a + b + c);
}
double G0123(const PointConfig& p) {
  auto [a, b, c] = cross_terms(p);
  return root(-a + b + c);
}
double G0213(const PointConfig& p) {
  auto [a, b, c] = cross_terms(p);
  return root(a - b + c);
}
double G0312(const PointConfig& p) {
  auto [a, b, c] = cross_terms(p);
  return root(a + b - c);
}
double F_literal(const PointConfig& p) {
  auto [a, b, c] = cross_terms(p);
  return std::sqrt(std::sqrt(a) + std::sqrt(b) + std::sqrt(c));
}

double four_point_code(const Code& G, const std::array<Word, 4>& d, const PointConfig& p) {
  const int r = G.n();
  if (!G.contains_allones()) throw std::invalid_argument("code must contain the all-ones word");
  Code DG = delta_code(G);
  for (const Word& w : d)
    if (w.l != r || w.r != r || !DG.contains(w.bits)) throw std::invalid_argument("d must lie in Delta G");
  p.validate();
  if ((d[0].bits ^ d[1].bits ^ d[2].bits ^ d[3].bits) != 0) return 0;
  const int all = wl_of(d[0].bits & d[1].bits & d[2].bits & d[3].bits, r);
  std::array<std::array<double, 4>, 4> e{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e[i][j] = -wl_of(d[i].bits & d[j].bits, r) / 8.0;
  return std::ldexp(1.0, -all) * pair_prefactor(p, e) * std::pow(F(p), all);
}

cplx four_point_C(const Code& G, const std::array<uint32_t, 4>& alpha, const PointConfig& p) {
  const int r = G.n();
  if (!G.contains_allones()) throw std::invalid_argument("code must contain the all-ones word");
  Code Gp = dual_code(G);
  for (uint32_t a : alpha)
    if ((a & ~low_mask(r)) || !Gp.contains(a)) throw std::invalid_argument("alpha must lie in G-perp");
  p.validate();
  const uint32_t a0 = alpha[0], a1 = alpha[1], a2 = alpha[2], a3 = alpha[3];
  if ((a0 ^ a1 ^ a2 ^ a3) != 0) return 0;
  Cocycle eps(r);
  int sign = eps.epsilon(a0, a1) * eps.epsilon(a0 ^ a1, a2) * eps.epsilon(a0 ^ a1 ^ a2, a3);
  if (popcount(a1 & a3) & 1) sign = -sign;
  const int kall = popcount((a0 & a1) ^ (a0 & a2) ^ (a0 & a3) ^ (a1 & a2) ^ (a1 & a3) ^ (a2 & a3));
  const int k01 = popcount((a0 & a1) ^ (a2 & a3));
  const int k02 = popcount((a0 & a2) ^ (a1 & a3));
  const int k03 = popcount((a0 & a3) ^ (a1 & a2));
  std::array<std::array<double, 4>, 4> e{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e[i][j] = -r / 8.0;
  double v = sign * std::ldexp(1.0, -r) * pair_prefactor(p, e) * std::pow(F(p), r - kall) *
             std::pow(G0123(p), k01) * std::pow(G0213(p), k02) * std::pow(G0312(p), k03);
  return v;
}

double intro_combination(cplx z1, cplx z2) {
  double a = std::abs(z1), b = std::abs(z2), c = std::abs(z1 - z2);
  return 0.5 * std::pow(a * a * b * b * c * c, -0.125) * std::sqrt(a + b + c);
}

double ising_block_sum(cplx z1, cplx z2) {
  cplx c0 = eval_block(IS::Sigma, IS::Sigma, IS::Sigma, IS::Sigma, IS::Zero, z1, z2);
  cplx c1 = eval_block(IS::Sigma, IS::Sigma, IS::Sigma, IS::Sigma, IS::Half, z1, z2);
  return std::norm(c0) + std::norm(c1);
}

void DeformParams::validate(double tol) const {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (sigma.rows() != 2 * N || sigma.cols() != 2 * N) throw std::invalid_argument("sigma must be 2N x 2N");
  for (const auto& v : s) {
    if (static_cast<int>(v.size()) != N) throw std::invalid_argument("sign vectors must have length N");
    for (int x : v)
      if (x != 1 && x != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
  Eigen::MatrixXd J = Eigen::MatrixXd::Identity(2 * N, 2 * N);
  J.bottomRightCorner(N, N) *= -1;
  double dev = (sigma.transpose() * J * sigma - J).cwiseAbs().maxCoeff();
  if (!(dev <= tol)) throw std::invalid_argument("sigma is not in O(N,N): deviation " + std::to_string(dev));
}

Eigen::Matrix4d deform_exponents(const DeformParams& dp, int r) {
  dp.validate();
  const int N = dp.N;
  Eigen::MatrixXd inv = dp.sigma.fullPivLu().inverse();
  std::array<Eigen::VectorXd, 4> pv;
  for (int i = 0; i < 4; ++i) {
    Eigen::VectorXd v(2 * N);
    for (int k = 0; k < N; ++k) v(k) = v(N + k) = dp.s[i][k];
    pv[i] = (inv * v).head(N);
  }
  Eigen::Matrix4d E = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) E(i, j) = E(j, i) = 0.25 * pv[i].dot(pv[j]) + 0.25 * N - r / 8.0;
  return E;
}

cplx deformed_four_point(const Code& G, const DeformParams& dp, const PointConfig& p) {
  const int r = G.n();
  if (!G.contains_allones()) throw std::invalid_argument("code must contain the all-ones word");
  dp.validate();
  if (static_cast<int>(weight2_orthogonal_set(dual_code(G)).size()) < dp.N)
    throw std::invalid_argument("code has fewer than N orthogonal weight-2 dual words");
  p.validate();
  for (int k = 0; k < dp.N; ++k)
    if (dp.s[0][k] + dp.s[1][k] + dp.s[2][k] + dp.s[3][k] != 0) return 0;
  Eigen::Matrix4d E = deform_exponents(dp, r);
  std::array<std::array<double, 4>, 4> e{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e[i][j] = E(i, j);
  return std::ldexp(1.0, -r + 3 * dp.N) * std::pow(F(p), r - 2 * dp.N) * pair_prefactor(p, e);
}

double average_func(int r, int N, const std::array<std::vector<int>, 4>& s, const PointConfig& p) {
  p.validate();
  for (int k = 0; k < N; ++k)
    if (s[0][k] + s[1][k] + s[2][k] + s[3][k] != 0) return 0;
  std::array<std::array<double, 4>, 4> e{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int dot = 0;
      for (int k = 0; k < N; ++k) dot += s[i][k] * s[j][k];
      e[i][j] = 0.25 * dot + 0.25 * N - r / 8.0;
    }
  return std::ldexp(1.0, -r + 3 * N) * std::pow(F(p), r - 2 * N) * pair_prefactor(p, e);
}

double f_ising(cplx z) {
  if (std::abs(z) == 0 || std::abs(1.0 - z) == 0) throw std::invalid_argument("f_Ising needs z not in {0, 1}");
  cplx s = std::sqrt(1.0 - z);
  return 0.5 * (std::abs(1.0 - s) + std::abs(1.0 + s));
}

double f_ising_literal(cplx z) {
  if (std::abs(z) == 0 || std::abs(1.0 - z) == 0) throw std::invalid_argument("f_Ising needs z not in {0, 1}");
  cplx s = std::sqrt(1.0 - z);
  return 0.5 * (std::sqrt(std::abs(1.0 - s)) + std::sqrt(std::abs(1.0 + s)));
}

namespace {

using Series = std::map<SeriesKey, Rational>;

Series series_mul(const Series& A, const Series& B, int N) {
  Series out;
  for (const auto& [ka, va] : A)
    for (const auto& [kb, vb] : B) {
      int a = std::get<0>(ka) + std::get<0>(kb), b = std::get<1>(ka) + std::get<1>(kb),
          c = std::get<2>(ka) + std::get<2>(kb);
      if (a + b + c > N) continue;
      if (a >= 2) {  // |z|^2 = z zbar
        a -= 2;
        ++b;
        ++c;
      }
      Rational& slot = out[{a, b, c}];
      slot = slot + va * vb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// binom(1/2, k)
Rational half_binom(int k) {
  Rational v(1);
  for (int j = 0; j < k; ++j) v = v * (Rational(1, 2) - Rational(j)) / Rational(j + 1);
  return v;
}

}  // namespace

std::map<SeriesKey, Rational> f_ising_series(int N) {
  if (N < 0) throw std::invalid_argument("order must be nonnegative");
  // |1 - z| = (1 - z)^{1/2} (1 - zbar)^{1/2}
  Series hz, hzb;
  for (int k = 0; k <= N; ++k) {
    Rational c = half_binom(k) * (k % 2 ? Rational(-1) : Rational(1));
    hz[{0, k, 0}] = c;
    hzb[{0, 0, k}] = c;
  }
  Series u = series_mul(hz, hzb, N);
  u[{0, 0, 0}] = u[{0, 0, 0}] - Rational(1);
  u[{1, 0, 0}] = u[{1, 0, 0}] + Rational(1);
  std::erase_if(u, [](const auto& kv) { return kv.second.is_zero(); });
  // f = (1 + u/2)^{1/2}, u has no constant term
  Series half_u;
  for (const auto& [k, v] : u) half_u[k] = v * Rational(1, 2);
  Series f{{{0, 0, 0}, Rational(1)}}, pw{{{0, 0, 0}, Rational(1)}};
  for (int k = 1; k <= N; ++k) {
    pw = series_mul(pw, half_u, N);
    Rational c = half_binom(k);
    for (const auto& [key, v] : pw) {
      Rational& slot = f[key];
      slot = slot + c * v;
    }
  }
  std::erase_if(f, [](const auto& kv) { return kv.second.is_zero(); });
  return f;
}

double eval_series(const std::map<SeriesKey, Rational>& s, cplx z) {
  cplx v = 0;
  for (const auto& [k, c] : s) {
    auto [a, b, cc] = k;
    v += c.to_double() * std::pow(std::abs(z), a) * std::pow(z, b) * std::pow(std::conj(z), cc);
  }
  return v.real();
}

}  // namespace artifact
