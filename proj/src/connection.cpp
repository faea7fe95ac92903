#include "artifact/connection.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace artifact {

namespace {

bool contains(const std::vector<IS>& v, IS h) { return std::find(v.begin(), v.end(), h) != v.end(); }

Cyclo single_B_raw(IS h0, IS h1, IS h2, IS h3, IS h, IS hp) {
  const Cyclo one = 1;
  const Cyclo i = Cyclo::i();
  const Cyclo em = Cyclo::zeta(-1);  // exp(-pi i/8)
  if (h1 == IS::Zero || h2 == IS::Zero) return one;
  if (h1 == IS::Half && h2 == IS::Half) return -one;
  if (h1 != h2) return (h0 == IS::Half || h3 == IS::Half) ? i : -i;
  // h1 = h2 = 1/16
  if (h0 != IS::Sigma && h3 != IS::Sigma) return h0 == h3 ? em : em * i;
  const Cyclo half = Rational(1, 2);
  return h == hp ? em * (half + i * Rational(1, 2)) : em * (half - i * Rational(1, 2));
}

int code6(IS h0, IS h1, IS h2, IS h3, IS h, IS hp) {
  int k = 0;
  for (IS x : {h0, h1, h2, h3, h, hp}) k = 3 * k + static_cast<int>(x);
  return k;
}

struct Table {
  std::array<Cyclo, 729> val, cval;
  std::array<bool, 729> ok{};
  Table() {
    const IS all[3] = {IS::Zero, IS::Half, IS::Sigma};
    for (IS a : all)
      for (IS b : all)
        for (IS c : all)
          for (IS d : all) {
            auto A = intermediates1(a, b, c, d);
            auto Ap = intermediates1(a, c, b, d);
            for (IS h : A)
              for (IS hp : Ap) {
                int k = code6(a, b, c, d, h, hp);
                ok[k] = true;
                val[k] = single_B_raw(a, b, c, d, h, hp);
                cval[k] = val[k].conj();
              }
          }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

}  // namespace

Cyclo single_B(IS h0, IS h1, IS h2, IS h3, IS h, IS hp) {
  if (!contains(intermediates1(h0, h1, h2, h3), h) || !contains(intermediates1(h0, h2, h1, h3), hp))
    throw std::invalid_argument("single_B: invalid intermediate labels");
  return single_B_raw(h0, h1, h2, h3, h, hp);
}

Cyclo multi_B_product(const Sector& s0, const Sector& s1, const Sector& s2, const Sector& s3, const Sector& lam,
                      const Sector& lamp) {
  const auto& T = table();
  const int n = s0.n();
  Cyclo v = 1;
  for (int i = 0; i < n; ++i) {
    int k = code6(s0.slot(i), s1.slot(i), s2.slot(i), s3.slot(i), lam.slot(i), lamp.slot(i));
    if (!T.ok[k]) throw std::invalid_argument("multi_B_product: invalid intermediate sectors");
    const Cyclo& b = i < s0.l ? T.val[k] : T.cval[k];
    if (b == Cyclo(1)) continue;
    v = v * b;
  }
  return v;
}

Cyclo multi_B_closed(int l, int r, uint32_t d0, uint32_t d1, uint32_t d2, uint32_t d3, uint32_t c0, uint32_t c1,
                     uint32_t c2, uint32_t c3, uint32_t c, uint32_t cp) {
  Sector s0(d0, c0, l, r), s1(d1, c1, l, r), s2(d2, c2, l, r), s3(d3, c3, l, r);
  Sector lam(d2 ^ d3, c, l, r), lamp(d1 ^ d3, cp, l, r);
  if (d0 != (d1 ^ d2 ^ d3)) throw std::invalid_argument("multi_B_closed: d0 != d1+d2+d3");
  if (!in_fusion(lam, s2, s3) || !in_fusion(s0, s1, lam) || !in_fusion(lamp, s1, s3) || !in_fusion(s0, s2, lamp))
    throw std::invalid_argument("multi_B_closed: intermediate sectors outside A");

  auto W = [l](uint32_t w) { return signed_wt(w, l); };
  const uint32_t c03 = c0 ^ c3;
  const long long e2 = W(c1 & c2) + W(d1 & c2 & c03) + W(d2 & c1 & c03);
  const long long ei = -W(d1 & c2) - W(d2 & c1) + W(d1 & d2 & c03);
  const uint32_t d12 = d1 & d2, d123 = d12 & d3;

  Cyclo v = Cyclo::ipow(2 * e2 + ei).times_zeta(-W(d12));
  const int pl = wl_of(d123, l), pr = wr_of(d123, l);
  Cyclo opi = (Cyclo(1) + Cyclo::i()) * Rational(1, 2);
  Cyclo omi = (Cyclo(1) - Cyclo::i()) * Rational(1, 2);
  v = v * opi.pow(pl) * omi.pow(pr);
  v = v * Cyclo::ipow(-W(d123 & (c ^ cp)));
  return v;
}

Cyclo multi_B_closed(const Sector& s0, const Sector& s1, const Sector& s2, const Sector& s3, const Sector& lam,
                     const Sector& lamp) {
  if (lam.d != (s2.d ^ s3.d) || lamp.d != (s1.d ^ s3.d))
    throw std::invalid_argument("multi_B_closed: intermediate d-part mismatch");
  return multi_B_closed(s0.l, s0.r, s0.d, s1.d, s2.d, s3.d, s0.c, s1.c, s2.c, s3.c, lam.c, lamp.c);
}

}  // namespace artifact
