#pragma once
// Conformal blocks, block ODEs, numeric monodromy along gamma_0, closed-form four-point
// correlators of code CFTs and their current-current deformation.
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "artifact/bitcode.hpp"
#include "artifact/rational.hpp"
#include "artifact/sectors.hpp"

namespace artifact {

using cplx = std::complex<double>;

struct BranchError : std::domain_error {
  using std::domain_error::domain_error;
};

// Principal region: |x| > |y|, x, y and every radicand off the negative real axis, Re(x^.5 - y^.5) > 0.
bool in_principal_region(cplx x, cplx y);

bool has_block(IS h0, IS h1, IS h2, IS h3, IS h);
cplx eval_block(IS h0, IS h1, IS h2, IS h3, IS h, cplx x, cplx y);  // throws BranchError outside the region

// |D[C(1, z)]| by 5-point central differences. h3 must be 1/2 or 1/16.
double ode_residual(IS h0, IS h1, IS h2, IS h3, IS h, cplx z);
// Same operator D_{h0..h3} applied to another block (negative controls).
double ode_residual_of(IS h0, IS h1, IS h2, IS h3, IS bh0, IS bh1, IS bh2, IS bh3, IS bh, cplx z);

// Coefficients of D = z(1-z) d^2 + (p0 + p1 z) d + (q0 + q2 z^2) / (z(1-z)).
struct OdeCoeffs {
  Rational p0, p1, q0, q2;
};
OdeCoeffs ode_coeffs(IS h0, IS h1, IS h2, IS h3);

struct MonodromyResult {
  std::array<IS, 4> labels;
  std::vector<IS> rows;  // h in A(h0,h1,h2,h3)
  std::vector<IS> cols;  // h' in A(h0,h2,h1,h3)
  Eigen::MatrixXcd recovered;
  Eigen::MatrixXcd expected;  // single_B
  double max_abs_err = 0;
  double lsq_residual = 0;
  int steps_taken = 0;
};

struct MonodromyOptions {
  int steps = 2000;
  int probes = 6;
  uint64_t seed = 0;  // 0: FRAMED_FORGE_SEED or the built-in default
};

MonodromyResult continue_gamma0(IS h0, IS h1, IS h2, IS h3, const MonodromyOptions& opt = {});

struct PointConfig {
  std::array<cplx, 4> z;
  void validate() const;  // throws std::invalid_argument when two points are closer than 1e-6
};

// a = |z01 z23|, b = |z02 z13|, c = |z03 z12|
double F(const PointConfig& p);  // (a+b+c)^.5
double G0123(const PointConfig& p);  // (-a+b+c)^.5
double G0213(const PointConfig& p);  // (a-b+c)^.5
double G0312(const PointConfig& p);  // (a+b-c)^.5
double F_literal(const PointConfig& p);  // (a^.5+b^.5+c^.5)^.5, kept for comparison

double four_point_code(const Code& G, const std::array<Word, 4>& d, const PointConfig& p);
cplx four_point_C(const Code& G, const std::array<uint32_t, 4>& alpha, const PointConfig& p);  // alpha: left words

double intro_combination(cplx z1, cplx z2);  // 1/2 |z1 z2 z12|^{-1/4} (|z1|+|z2|+|z12|)^{1/2}
double ising_block_sum(cplx z1, cplx z2);        // |C^0|^2 + |C^{1/2}|^2 of the (1/16)^4 blocks

struct DeformParams {
  int N = 0;
  Eigen::MatrixXd sigma;                  // 2N x 2N
  std::array<std::vector<int>, 4> s;      // entries +-1
  void validate(double tol = 1e-10) const;  // throws std::invalid_argument unless sigma^T J sigma = J
};

Eigen::Matrix4d deform_exponents(const DeformParams& dp, int r);
cplx deformed_four_point(const Code& G, const DeformParams& dp, const PointConfig& p);
double average_func(int r, int N, const std::array<std::vector<int>, 4>& s, const PointConfig& p);

double f_ising(cplx z);
double f_ising_literal(cplx z);

// Expansion of f_Ising at 0 in |z|^a z^b zbar^c, a in {0,1}, total degree a+b+c <= N.
using SeriesKey = std::tuple<int, int, int>;
std::map<SeriesKey, Rational> f_ising_series(int N);
double eval_series(const std::map<SeriesKey, Rational>& s, cplx z);

}  // namespace artifact
