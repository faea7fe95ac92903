#include "artifact/sectors.hpp"

#include <algorithm>
#include <stdexcept>

namespace artifact {

Rational is_value(IS h) {
  switch (h) {
    case IS::Zero: return 0;
    case IS::Half: return Rational(1, 2);
    case IS::Sigma: return Rational(1, 16);
  }
  return 0;
}

std::string is_name(IS h) {
  switch (h) {
    case IS::Zero: return "0";
    case IS::Half: return "1/2";
    case IS::Sigma: return "1/16";
  }
  return "?";
}

IS parse_is(const std::string& s) {
  if (s == "0") return IS::Zero;
  if (s == "1/2" || s == "h" || s == "0.5") return IS::Half;
  if (s == "1/16" || s == "s" || s == "0.0625") return IS::Sigma;
  throw std::invalid_argument("not an Ising label: '" + s + "'");
}

std::vector<IS> fuse1(IS a, IS b) {
  if (a == IS::Zero) return {b};
  if (b == IS::Zero) return {a};
  if (a == IS::Sigma && b == IS::Sigma) return {IS::Zero, IS::Half};
  if (a == IS::Half && b == IS::Half) return {IS::Zero};
  return {IS::Sigma};
}

std::vector<IS> intermediates1(IS h0, IS h1, IS h2, IS h3) {
  std::vector<IS> out;
  for (IS x : fuse1(h2, h3)) {
    auto f = fuse1(h1, x);
    if (std::find(f.begin(), f.end(), h0) != f.end()) out.push_back(x);
  }
  return out;
}

Sector::Sector(uint32_t d_, uint32_t c_, int l_, int r_) : d(d_), c(c_), l(l_), r(r_) {
  if (l_ < 0 || r_ < 0 || l_ + r_ > kMaxWordLen) throw std::invalid_argument("sector length out of range");
  uint32_t m = low_mask(l_ + r_);
  if ((d_ | c_) & ~m) throw std::invalid_argument("sector word longer than l+r");
  if (d_ & c_) throw std::invalid_argument("sector needs dc = 0");
}

Sector::Sector(const Word& d_, const Word& c_) : Sector(d_.bits, c_.bits, d_.l, d_.r) {
  if (d_.l != c_.l || d_.r != c_.r) throw std::invalid_argument("sector words have different splits");
}

Sector Sector::from_labels(const std::vector<IS>& labels, int l) {
  uint32_t d = 0, c = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == IS::Sigma) d |= 1u << i;
    if (labels[i] == IS::Half) c |= 1u << i;
  }
  return Sector(d, c, l, static_cast<int>(labels.size()) - l);
}

IS Sector::slot(int i) const {
  if ((d >> i) & 1u) return IS::Sigma;
  if ((c >> i) & 1u) return IS::Half;
  return IS::Zero;
}

std::string Sector::str() const { return "d=" + dword().str() + " c=" + cword().str(); }

SectorWeight weight(const Sector& s) {
  SectorWeight w;
  w.lwt = Rational(wl_of(s.d, s.l), 16) + Rational(wl_of(s.c, s.l), 2);
  w.rwt = Rational(wr_of(s.d, s.l), 16) + Rational(wr_of(s.c, s.l), 2);
  w.spin = w.lwt - w.rwt;
  return w;
}

static void check_pair(const Sector& a, const Sector& b) {
  if (a.l != b.l || a.r != b.r) throw std::invalid_argument("sectors have different (l,r)");
}

std::vector<Sector> fuse(const Sector& a, const Sector& b) {
  check_pair(a, b);
  const uint32_t m = low_mask(a.n());
  const uint32_t d = a.d ^ b.d;
  const uint32_t base = (~d & m) & (a.c ^ b.c);
  const uint32_t free = a.d & b.d;
  std::vector<Sector> out;
  // enumerate subsets of free
  uint32_t g = 0;
  while (true) {
    out.emplace_back(d, base ^ g, a.l, a.r);
    if (g == free) break;
    g = (g - free) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_fusion(const Sector& out, const Sector& a, const Sector& b) {
  const uint32_t m = low_mask(a.n());
  if (out.d != (a.d ^ b.d)) return false;
  const uint32_t base = (~out.d & m) & (a.c ^ b.c);
  return ((out.c ^ base) & ~(a.d & b.d)) == 0;
}

std::vector<Sector> intermediates(const Sector& s0, const Sector& s1, const Sector& s2, const Sector& s3) {
  check_pair(s0, s1);
  check_pair(s0, s2);
  check_pair(s0, s3);
  std::vector<Sector> out;
  for (const auto& x : fuse(s2, s3))
    if (in_fusion(s0, s1, x)) out.push_back(x);
  return out;
}

std::vector<Sector> all_sectors(int l, int r) {
  const int n = l + r;
  if (n > 16) throw std::invalid_argument("all_sectors limited to l+r <= 16");
  std::vector<Sector> out;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  out.reserve(total);
  for (long long k = 0; k < total; ++k) {
    long long t = k;
    uint32_t d = 0, c = 0;
    for (int i = 0; i < n; ++i) {
      int v = t % 3;
      t /= 3;
      if (v == 1) c |= 1u << i;
      if (v == 2) d |= 1u << i;
    }
    out.emplace_back(d, c, l, r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace artifact
