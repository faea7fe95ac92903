#include "artifact/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace artifact {

Cyclo Cyclo::zeta(int k, const Rational& coef) {
  k = ((k % 16) + 16) % 16;
  Cyclo r;
  if (k < 8)
    r.c_[k] = coef;
  else
    r.c_[k - 8] = -coef;
  return r;
}

bool Cyclo::is_zero() const {
  for (const auto& q : c_)
    if (!q.is_zero()) return false;
  return true;
}

Cyclo Cyclo::conj() const {
  Cyclo r;
  r.c_[0] = c_[0];
  for (int k = 1; k < 8; ++k) r.c_[8 - k] = -c_[k];
  return r;
}

Cyclo Cyclo::times_zeta(int k) const {
  k = ((k % 16) + 16) % 16;
  Cyclo r;
  for (int j = 0; j < 8; ++j) {
    if (c_[j].is_zero()) continue;
    int t = (j + k) % 16;
    if (t < 8)
      r.c_[t] = c_[j];
    else
      r.c_[t - 8] = -c_[j];
  }
  return r;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> s = 0;
  for (int k = 0; k < 8; ++k) {
    if (c_[k].is_zero()) continue;
    s += c_[k].to_double() * std::polar(1.0, M_PI * k / 8.0);
  }
  return s;
}

std::string Cyclo::str() const {
  std::string s = "(";
  for (int k = 0; k < 8; ++k) {
    if (k) s += ", ";
    s += c_[k].str();
  }
  return s + ")";
}

std::string Cyclo::approx() const {
  auto z = to_complex();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real() == 0 ? 0.0 : z.real(), z.imag() == 0 ? 0.0 : z.imag());
  return buf;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  Cyclo r = a;
  r += b;
  return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
  Cyclo r = a;
  r -= b;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& b) {
  for (int k = 0; k < 8; ++k)
    if (!b.c_[k].is_zero()) c_[k] += b.c_[k];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& b) {
  for (int k = 0; k < 8; ++k)
    if (!b.c_[k].is_zero()) c_[k] -= b.c_[k];
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r;
  for (int k = 0; k < 8; ++k)
    if (!c_[k].is_zero()) r.c_[k] = -c_[k];
  return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  Cyclo r;
  for (int i = 0; i < 8; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c_[j].is_zero()) continue;
      int k = i + j;
      Rational p = a.c_[i] * b.c_[j];
      if (k < 8)
        r.c_[k] += p;
      else
        r.c_[k - 8] -= p;
    }
  }
  return r;
}

Cyclo operator*(const Cyclo& a, const Rational& q) {
  Cyclo r;
  if (q.is_zero()) return r;
  for (int k = 0; k < 8; ++k)
    if (!a.c_[k].is_zero()) r.c_[k] = a.c_[k] * q;
  return r;
}

Cyclo Cyclo::pow(int k) const {
  if (k < 0) throw std::domain_error("cyclo: negative power");
  Cyclo r = 1, b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Cyclo Cyclo::galois(int k) const {
  if (k % 2 == 0) throw std::invalid_argument("cyclo: galois exponent must be odd");
  Cyclo r;
  for (int j = 0; j < 8; ++j)
    if (!c_[j].is_zero()) r += zeta(j * k, c_[j]);
  return r;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("cyclo: inverse of zero");
  Cyclo p = 1;
  for (int k = 3; k < 16; k += 2) p = p * galois(k);
  Cyclo nm = *this * p;  // the field norm, a rational
  return p * (Rational(1) / nm.c_[0]);
}

namespace {

Rational parse_rational(std::string t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  mpq_class q;
  if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + t + "'");
  q.canonicalize();
  return Rational(q);
}

}  // namespace

Cyclo parse_cyclo(const std::string& s) {
  auto a = s.find('('), b = s.rfind(')');
  if (a == std::string::npos || b == std::string::npos || b < a) {
    // a bare rational is accepted as a real value
    return Cyclo(parse_rational(s));
  }
  std::array<Rational, 8> c{};
  std::stringstream ss(s.substr(a + 1, b - a - 1));
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 8) throw std::invalid_argument("cyclo literal has more than 8 coordinates");
    c[k++] = parse_rational(item);
  }
  if (k != 8) throw std::invalid_argument("cyclo literal needs 8 coordinates");
  return Cyclo(c);
}

}  // namespace artifact
