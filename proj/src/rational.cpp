#include "artifact/rational.hpp"

#include <limits>
#include <stdexcept>

namespace artifact {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) {
  return v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max();
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(q);
  }
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d != 1) {
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
  if (n == 0) d = 1;
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
  } else {
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    r.big_ = std::make_shared<const mpq_class>(q);
  }
  return r;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
    return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, 1);
    return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational: division by zero");
  if (!a.big_ && !b.big_)
    return Rational::from_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  return from_i128(-static_cast<i128>(num_), den_);
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

}  // namespace artifact
