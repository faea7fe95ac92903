#pragma once
// Exact rationals. Small values stay in int64; anything that overflows moves to GMP.
#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace artifact {

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_small() const { return !big_; }
  int sign() const;
  mpq_class to_mpq() const;
  double to_double() const;
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_i128(__int128 n, __int128 d);
  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace artifact
