#pragma once
// Elements of Z[zeta, 1/2], zeta = exp(pi i/8), in the power basis zeta^0..zeta^7 (zeta^8 = -1).
#include <array>
#include <complex>
#include <string>

#include "artifact/rational.hpp"

namespace artifact {

class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long long n) { c_[0] = n; }  // NOLINT
  Cyclo(const Rational& q) { c_[0] = q; }  // NOLINT
  explicit Cyclo(const std::array<Rational, 8>& c) : c_(c) {}

  static Cyclo zeta(int k, const Rational& coef = 1);  // coef * zeta^k, any integer k
  static Cyclo i() { return zeta(4); }
  static Cyclo sqrt2() { return zeta(2) - zeta(6); }
  static Cyclo inv_sqrt2() { return (zeta(2) - zeta(6)) * Rational(1, 2); }

  const Rational& operator[](int k) const { return c_[k]; }
  const std::array<Rational, 8>& coeffs() const { return c_; }

  bool is_zero() const;
  Cyclo conj() const;
  Cyclo times_zeta(int k) const;  // coordinate shift, cheap
  std::complex<double> to_complex() const;
  std::string str() const;      // "(p0/q0, ..., p7/q7)"
  std::string approx() const;   // "0.7071+0.7071i"

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Rational& q);
  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& b);
  Cyclo& operator-=(const Cyclo& b);
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }

  // i^k and ((1+i)/2)^k style helpers used by the connection formulas
  static Cyclo ipow(long long k) { return zeta(static_cast<int>(((k % 4) + 4) % 4) * 4); }
  Cyclo pow(int k) const;
  Cyclo galois(int k) const;  // zeta -> zeta^k, k odd
  Cyclo inverse() const;      // throws std::domain_error on zero

 private:
  std::array<Rational, 8> c_{};
};

// Parse "(p0/q0, ..., p7/q7)"; throws std::invalid_argument.
Cyclo parse_cyclo(const std::string& s);

}  // namespace artifact
