#include "artifact/codecft.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace artifact {

// ---- cocycle ----

Cocycle::Cocycle(int r) : r_(r) {
  if (r < 1 || 2 * r > kMaxWordLen) throw std::invalid_argument("cocycle rank out of range");
  for (int i = 0; i < r; ++i) V_.push_back((1u << i) | (1u << (r + i)));
  for (int i = 0; i + 1 < r; ++i) V_.push_back((1u << i) | (1u << (i + 1)));
  const int m = rank();
  E_.assign(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int bit = 0;
      if (i == j) bit = (((signed_wt(V_[i], r) / 2) % 2) + 2) % 2;
      if (i > j) bit = popcount(V_[i] & V_[j]) & 1;
      if (bit) E_[i] |= 1u << j;
    }
}

uint32_t Cocycle::coords(uint32_t a) const {
  const uint32_t m = low_mask(r_);
  const uint32_t aR = (a >> r_) & m;
  const uint32_t b = (a & m) ^ aR;
  if (popcount(a) % 2 != 0) throw std::invalid_argument("cocycle: word is not even");
  uint32_t co = aR, prev = 0;
  for (int j = 0; j + 1 < r_; ++j) {
    prev ^= (b >> j) & 1u;
    if (prev) co |= 1u << (r_ + j);
  }
  return co;
}

int Cocycle::epsilon(uint32_t a, uint32_t b) const {
  const uint32_t ca = coords(a), cb = coords(b);
  int t = 0;
  for (int i = 0; i < rank(); ++i)
    if ((ca >> i) & 1u) t ^= popcount(E_[i] & cb) & 1;
  return t ? -1 : 1;
}

int Cocycle::epsilon(const Word& a, const Word& b) const {
  if (a.l != r_ || a.r != r_ || b.l != r_ || b.r != r_) throw std::invalid_argument("cocycle: words must be (r,r)");
  return epsilon(a.bits, b.bits);
}

// ---- S_G ----

SG::SG(const Code& G) : r_(G.n()), G_(G), coc_(G.n()) {
  if (G.r() != 0) throw std::invalid_argument("S_G needs a plain code");
  if (!G.contains_allones()) throw std::invalid_argument("S_G needs 1^r in G");
  const uint32_t m = low_mask(r_);
  const Code Gp = dual_code(G);
  const auto gp = Gp.elements();
  for (uint32_t g : G.elements()) {
    const uint32_t d = g | (g << r_);
    const uint32_t free = ~g & m;  // left complement of d
    for (uint32_t a : gp) {
      uint32_t x = 0;
      while (true) {
        const uint32_t alpha = a ^ (x | (x << r_));
        index_[{d, alpha}] = static_cast<int>(basis_.size());
        basis_.push_back({d, alpha});
        if (x == free) break;
        x = (x - free) & free;
      }
    }
  }
}

Sector SG::sector(int i) const {
  const auto [d, a] = basis_[i];
  const uint32_t m = low_mask(2 * r_);
  return Sector(d, ~d & m & a, r_, r_);
}

std::string SG::label(int i) const {
  return "e[" + Word(basis_[i].second, r_, r_).str() + "]t[" + Word(basis_[i].first, r_, r_).str() + "]";
}

int SG::index(uint32_t d, uint32_t alpha) const {
  auto it = index_.find({d, alpha});
  return it == index_.end() ? -1 : it->second;
}

std::pair<int, uint32_t> SG::reduce(uint32_t d, uint32_t beta) const {
  const uint32_t m = low_mask(r_);
  const uint32_t bL = beta & m, bR = (beta >> r_) & m, dl = d & m;
  const uint32_t keep = bR & ~dl, gm = bR & dl;
  const uint32_t b0 = (bL ^ bR) ^ (keep | (keep << r_));
  const uint32_t g = gm | (gm << r_);
  return {coc_.epsilon(b0, g), b0};
}

Vec SG::product(int i, int j) const {
  const auto [d1, a1] = basis_[i];
  const auto [d2, a2] = basis_[j];
  const uint32_t m2 = low_mask(2 * r_);
  const uint32_t d2p = ~d2 & m2;
  const int w = signed_wt(d1 & a2, r_);
  const int e = popcount(d1 & d2p & a1 & a2) + popcount(d1 & d2 & a2) + (((w / 2) % 2) + 2) % 2;
  const int sg = (e & 1) ? -1 : 1;
  const uint32_t d12 = d1 & d2, d = d1 ^ d2;
  const uint32_t sub = d12 & low_mask(r_);
  std::map<int, long long> acc;
  uint32_t x = 0;
  while (true) {
    const uint32_t g = x | (x << r_);
    const int coef = sg * coc_.epsilon(a1, g) * coc_.epsilon(a1 ^ g, a2);
    const auto [ep, b0] = reduce(d, a1 ^ g ^ a2);
    const int k = index(d, b0);
    if (k < 0) throw std::logic_error("S_G product left the basis");
    acc[k] += coef * ep;
    if (x == sub) break;
    x = (x - sub) & sub;
  }
  Vec out;
  for (auto [k, c] : acc)
    if (c) out.push_back({k, Cyclo(c)});
  return out;
}

FramedAlgebra SG::algebra() const {
  FramedAlgebra S(r_, r_);
  for (int i = 0; i < size(); ++i) S.add_basis(label(i), sector(i));
  S.set_unit(index(0, 0));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) S.set_product(i, j, product(i, j));
  return S;
}

FramedAlgebra build_SG(const Code& G) { return SG(G).algebra(); }

// ---- dimensions and characters ----

Dims dims(const Code& G) {
  if (!G.contains_allones()) throw std::invalid_argument("dims needs 1^r in G");
  const int r = G.n(), k = G.dim();
  Dims out;
  for (uint32_t g : G.elements()) {
    const long long v = 1LL << (2 * r - k - popcount(g));
    out.by_d[g | (g << r)] = v;
    out.total += v;
  }
  const auto N = enumerator(G);
  for (int w = 0; w <= r; ++w) out.from_enumerator += N[w] * (1LL << (2 * r - k - w));
  return out;
}

CharacterVector character(const FramedAlgebra& S) {
  CharacterVector Z;
  for (int i = 0; i < S.size(); ++i) Z[S.sector(i)] += Cyclo(1);
  return Z;
}

CharacterVector character(const SG& S) {
  CharacterVector Z;
  for (int i = 0; i < S.size(); ++i) Z[S.sector(i)] += Cyclo(1);
  return Z;
}

CharacterVector character_formula(const Code& G) {
  const int r = G.n();
  const uint32_t m2 = low_mask(2 * r);
  const Code C = dual_code(delta_code(G));
  const auto Cel = C.elements();
  CharacterVector Z;
  for (uint32_t g : G.elements()) {
    const uint32_t d = g | (g << r);
    const Rational w(1, 1LL << popcount(g));
    for (uint32_t a : Cel) Z[Sector(d, ~d & m2 & a, r, r)] += Cyclo(w);
  }
  for (auto it = Z.begin(); it != Z.end();)
    it = it->second.is_zero() ? Z.erase(it) : std::next(it);
  return Z;
}

namespace {

// a + b sqrt2; the S-matrix entries and everything they generate live here
struct Q2 {
  Rational a, b;
  bool zero() const { return a.is_zero() && b.is_zero(); }
};
Q2 operator+(const Q2& x, const Q2& y) { return {x.a + y.a, x.b + y.b}; }
Q2 operator-(const Q2& x, const Q2& y) { return {x.a - y.a, x.b - y.b}; }
Q2 half(const Q2& x) { return {x.a * Rational(1, 2), x.b * Rational(1, 2)}; }
Q2 over_sqrt2(const Q2& x) { return {x.b, x.a * Rational(1, 2)}; }  // (a + b s)/s = b + (a/2) s

bool to_q2(const Cyclo& c, Q2& out) {
  // sqrt2 = zeta^2 - zeta^6
  for (int k : {1, 3, 4, 5, 7})
    if (!c[k].is_zero()) return false;
  if (!(c[2] == -c[6])) return false;
  out = {c[0], c[2]};
  return true;
}

Cyclo from_q2(const Q2& x) { return Cyclo(x.a) + Cyclo::sqrt2() * x.b; }

int slot_digit(const Sector& s, int i) { return static_cast<int>(s.slot(i)); }

// Apply the 3x3 S-matrix on every slot of a dense array indexed in base 3.
void apply_S(std::vector<Q2>& z, int n) {
  long long stride = 1;
  const long long total = static_cast<long long>(z.size());
  for (int slot = 0; slot < n; ++slot, stride *= 3) {
    for (long long base = 0; base < total; ++base) {
      if ((base / stride) % 3 != 0) continue;
      Q2& x0 = z[base];
      Q2& x1 = z[base + stride];
      Q2& x2 = z[base + 2 * stride];
      if (x0.zero() && x1.zero() && x2.zero()) continue;
      const Q2 s01 = half(x0 + x1);
      const Q2 t2 = over_sqrt2(x2);
      const Q2 y2 = over_sqrt2(x0 - x1);
      x0 = s01 + t2;
      x1 = s01 - t2;
      x2 = y2;
    }
  }
}

}  // namespace

CharacterVector s_transform(const CharacterVector& Z, int l, int r) {
  const int n = l + r;
  if (n > 14) throw std::invalid_argument("s_transform limited to l+r <= 14");
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  bool real_sqrt2 = true;
  for (const auto& [s, c] : Z) {
    Q2 q;
    if (!to_q2(c, q)) real_sqrt2 = false;
  }
  if (real_sqrt2) {
    std::vector<Q2> z(total);
    for (const auto& [s, c] : Z) {
      if (s.l != l || s.r != r) throw std::invalid_argument("character has wrong (l,r)");
      long long idx = 0, p = 1;
      for (int i = 0; i < n; ++i, p *= 3) idx += slot_digit(s, i) * p;
      to_q2(c, z[idx]);
    }
    // the right-moving slots use conj(S) = S, so every slot gets the same matrix
    apply_S(z, n);
    CharacterVector out;
    for (long long idx = 0; idx < total; ++idx) {
      if (z[idx].zero()) continue;
      std::vector<IS> lab(n);
      long long t = idx;
      for (int i = 0; i < n; ++i, t /= 3) lab[i] = static_cast<IS>(t % 3);
      out[Sector::from_labels(lab, l)] = from_q2(z[idx]);
    }
    return out;
  }
  // general Cyclo coefficients: expand term by term
  const Cyclo h = Rational(1, 2), s = Cyclo::inv_sqrt2();
  const Cyclo M[3][3] = {{h, h, s}, {h, h, -s}, {s, -s, Cyclo()}};
  CharacterVector out;
  for (const auto& [sec, c] : Z) {
    std::vector<std::pair<std::vector<IS>, Cyclo>> cur{{{}, c}};
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<std::vector<IS>, Cyclo>> nxt;
      const int mu = slot_digit(sec, i);
      for (auto& [lab, v] : cur)
        for (int nu = 0; nu < 3; ++nu) {
          if (M[mu][nu].is_zero()) continue;
          auto l2 = lab;
          l2.push_back(static_cast<IS>(nu));
          nxt.push_back({l2, v * (i < l ? M[mu][nu] : M[mu][nu].conj())});
        }
      cur = std::move(nxt);
    }
    for (auto& [lab, v] : cur) out[Sector::from_labels(lab, l)] += v;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

bool verify_modular(const Code& G) {
  const CharacterVector Z = character(SG(G));
  const int r = G.n();
  return s_transform(Z, r, r) == Z;
}

// ---- classification ----

std::vector<Code> all_subcodes(int r) {
  if (r < 1 || r > 8) throw std::invalid_argument("subcode enumeration limited to 1 <= r <= 8");
  std::vector<Code> out;
  // reduced echelon matrices: choose pivots, then fill each row to the right of its pivot off the pivot columns
  for (uint32_t piv = 0; piv < (1u << r); ++piv) {
    std::vector<int> P;
    for (int i = 0; i < r; ++i)
      if ((piv >> i) & 1u) P.push_back(i);
    std::vector<uint32_t> freemask;
    int nfree = 0;
    for (int p : P) {
      uint32_t f = 0;
      for (int j = p + 1; j < r; ++j)
        if (!((piv >> j) & 1u)) f |= 1u << j;
      freemask.push_back(f);
      nfree += popcount(f);
    }
    for (uint64_t fill = 0; fill < (uint64_t(1) << nfree); ++fill) {
      std::vector<uint32_t> rows;
      uint64_t t = fill;
      for (size_t k = 0; k < P.size(); ++k) {
        uint32_t row = 1u << P[k];
        for (int j = 0; j < r; ++j)
          if ((freemask[k] >> j) & 1u) {
            if (t & 1u) row |= 1u << j;
            t >>= 1;
          }
        rows.push_back(row);
      }
      out.emplace_back(r, 0, rows);
    }
  }
  return out;
}

std::vector<Code> classify_codes(int r) {
  if (r < 1 || r > 8) throw std::invalid_argument("classify_codes needs 1 <= r <= 8");
  std::set<std::vector<uint32_t>> seen;
  std::vector<Code> out;
  for (const Code& G : all_subcodes(r)) {
    if (!G.contains_allones() || !is_indecomposable(G)) continue;
    Code c = canonical_form(G);
    if (seen.insert(c.gens()).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Code& a, const Code& b) {
    long long da = dims(a).total, db = dims(b).total;
    if (da != db) return da > db;
    return a.str() < b.str();
  });
  return out;
}

long long currents(const Code& G) {
  long long n = 0;
  for (uint32_t w : dual_code(G).elements())
    if (popcount(w) == 2) ++n;
  return n;
}

// ---- q-characters ----

QSeries q_character(IS h, int N) {
  if (N < 1 || N > 200) throw std::invalid_argument("q_character needs 1 <= N <= 200");
  int a = 1, b = 7;
  if (h == IS::Half) a = 5, b = 11;
  if (h == IS::Sigma) a = 2, b = 10;
  // numerator sum_k q^{12k^2+ka} - q^{12k^2+kb+(b^2-a^2)/48}, relative to q^{(a^2-2)/48}
  std::vector<long long> num(N, 0);
  for (long long k = -N; k <= N; ++k) {
    long long e1 = 12 * k * k + k * a;
    long long e2 = 12 * k * k + k * b + (b * b - a * a) / 48;
    if (e1 >= 0 && e1 < N) num[e1] += 1;
    if (e2 >= 0 && e2 < N) num[e2] -= 1;
  }
  // partition numbers via the pentagonal recurrence
  std::vector<long long> p(N, 0);
  p[0] = 1;
  for (int n = 1; n < N; ++n) {
    long long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      long long sign = (k % 2) ? 1 : -1;
      s += sign * p[n - g1];
      if (g2 <= n) s += sign * p[n - g2];
    }
    p[n] = s;
  }
  QSeries out;
  out.leading = Rational(a * a - 2, 48);
  out.coeffs.assign(N, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; i + j < N; ++j) out.coeffs[i + j] += num[i] * p[j];
  return out;
}

}  // namespace artifact
