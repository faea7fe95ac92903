#include "artifact/bitcode.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace artifact {

Word::Word(uint32_t b, int l_, int r_) : bits(b), l(l_), r(r_) {
  if (l_ < 0 || r_ < 0 || l_ + r_ > kMaxWordLen) throw std::invalid_argument("word length out of range");
  if (l_ + r_ < 32 && (b >> (l_ + r_)) != 0) throw std::invalid_argument("word has bits beyond its length");
}

uint32_t Word::mask() const { return low_mask(n()); }
uint32_t Word::left_mask() const { return low_mask(l); }

std::string Word::str() const {
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (i == l && r > 0) s += '|';
    s += get(i) ? '1' : '0';
  }
  return s;
}

Word parse_word(const std::string& s) {
  uint32_t b = 0;
  int n = 0, l = -1;
  for (char ch : s) {
    if (ch == '|') {
      if (l >= 0) throw std::invalid_argument("word '" + s + "' has two bars");
      l = n;
      continue;
    }
    if (ch != '0' && ch != '1') throw std::invalid_argument("word '" + s + "' has a character other than 0/1/|");
    if (n >= kMaxWordLen) throw std::invalid_argument("word '" + s + "' is longer than 32");
    if (ch == '1') b |= 1u << n;
    ++n;
  }
  if (l < 0) l = n;
  return Word(b, l, n - l);
}

static void same_shape(const Word& a, const Word& b) {
  if (a.l != b.l || a.r != b.r) throw std::invalid_argument("word length mismatch");
}

Word word_mul(const Word& a, const Word& b) {
  same_shape(a, b);
  return Word(a.bits & b.bits, a.l, a.r);
}

Word word_add(const Word& a, const Word& b) {
  same_shape(a, b);
  return Word(a.bits ^ b.bits, a.l, a.r);
}

Weights weights(const Word& a) {
  Weights w;
  w.wl = wl_of(a.bits, a.l);
  w.wr = wr_of(a.bits, a.l);
  w.signed_weight = w.wl - w.wr;
  return w;
}

Word delta_embed(const Word& g) {
  if (g.r != 0) throw std::invalid_argument("delta_embed expects a plain word");
  if (2 * g.l > kMaxWordLen) throw std::invalid_argument("delta_embed: result longer than 32");
  return Word(g.bits | (g.bits << g.l), g.l, g.l);
}

Word ones(int l, int r) { return Word(low_mask(l + r), l, r); }

std::vector<uint32_t> rref(std::vector<uint32_t> rows) {
  std::vector<uint32_t> out;
  for (uint32_t v : rows) {
    for (uint32_t b : out)
      if (v & (b & -b)) v ^= b;
    if (!v) continue;
    uint32_t p = v & -v;
    for (auto& b : out)
      if (b & p) b ^= v;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) { return (a & -a) < (b & -b); });
  return out;
}

Code::Code(int l, int r, const std::vector<uint32_t>& spanning) : l_(l), r_(r) {
  if (l < 0 || r < 0 || l + r > kMaxWordLen) throw std::invalid_argument("code length out of range");
  uint32_t m = low_mask(l + r);
  for (uint32_t v : spanning)
    if (v & ~m) throw std::invalid_argument("generator longer than code length");
  gens_ = rref(spanning);
}

Code Code::from_words(const std::vector<Word>& ws, int l, int r) {
  std::vector<uint32_t> v;
  for (const auto& w : ws) {
    if (w.l != l || w.r != r) throw std::invalid_argument("generator split does not match code split");
    v.push_back(w.bits);
  }
  return Code(l, r, v);
}

Code Code::full(int l, int r) {
  std::vector<uint32_t> v;
  for (int i = 0; i < l + r; ++i) v.push_back(1u << i);
  return Code(l, r, v);
}

std::vector<Word> Code::gen_words() const {
  std::vector<Word> v;
  for (uint32_t g : gens_) v.emplace_back(g, l_, r_);
  return v;
}

bool Code::contains(uint32_t w) const {
  for (uint32_t b : gens_)
    if (w & (b & -b)) w ^= b;
  return w == 0;
}

std::vector<uint32_t> Code::elements() const {
  std::vector<uint32_t> out;
  out.reserve(size_t(1) << dim());
  uint32_t cur = 0;
  out.push_back(0);
  for (uint64_t k = 1; k < (uint64_t(1) << dim()); ++k) {
    cur ^= gens_[__builtin_ctzll(k)];
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Code::str() const {
  std::string s = "<";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += Word(gens_[i], l_, r_).str();
  }
  return s + ">";
}

Code dual_code(const Code& G) {
  // Solve <v, g> = 0 for all generators by Gaussian elimination on the generator matrix.
  const int n = G.n();
  const auto& gens = G.gens();
  std::vector<int> pivots;
  for (uint32_t g : gens) pivots.push_back(__builtin_ctz(g));
  std::vector<uint32_t> out;
  for (int j = 0; j < n; ++j) {
    if (std::find(pivots.begin(), pivots.end(), j) != pivots.end()) continue;
    // free coordinate j; each pivot coordinate equals the entry of its row at j
    uint32_t v = 1u << j;
    for (size_t k = 0; k < gens.size(); ++k)
      if ((gens[k] >> j) & 1u) v |= 1u << pivots[k];
    out.push_back(v);
  }
  return Code(G.l(), G.r(), out);
}

Code delta_code(const Code& G) {
  if (G.r() != 0) throw std::invalid_argument("delta_code expects a plain code");
  std::vector<Word> ws;
  for (const auto& g : G.gen_words()) ws.push_back(delta_embed(g));
  return Code::from_words(ws, G.l(), G.l());
}

std::vector<long long> enumerator(const Code& G) {
  std::vector<long long> N(G.n() + 1, 0);
  for (uint32_t w : G.elements()) ++N[popcount(w)];
  return N;
}

Code permute(const Code& G, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != G.n()) throw std::invalid_argument("permutation length mismatch");
  std::vector<uint32_t> v;
  for (uint32_t g : G.gens()) {
    uint32_t h = 0;
    for (int i = 0; i < G.n(); ++i)
      if ((g >> i) & 1u) h |= 1u << perm[i];
    v.push_back(h);
  }
  return Code(G.l(), G.r(), v);
}

std::vector<std::vector<int>> components(const Code& G) {
  // In reduced echelon form, coordinates are joined through the rows whose support meets them.
  const int n = G.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (uint32_t g : G.gens()) {
    int p = __builtin_ctz(g);
    for (int i = 0; i < n; ++i)
      if ((g >> i) & 1u) parent[find(i)] = find(p);
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> idx(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    if (idx[root] < 0) {
      idx[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[idx[root]].push_back(i);
  }
  return comps;
}

bool is_indecomposable(const Code& G) { return components(G).size() <= 1; }

bool is_indecomposable_bruteforce(const Code& G) {
  const int n = G.n();
  if (n <= 1) return true;
  if (n > 20) throw std::invalid_argument("bruteforce decomposability limited to n <= 20");
  auto elems = G.elements();
  const uint32_t all = low_mask(n);
  for (uint32_t P = 1; P < all; ++P) {
    if (P & 1u) continue;  // fix coordinate 0 in Q, each split once
    uint32_t Q = all & ~P;
    long long inP = 0, inQ = 0;
    for (uint32_t w : elems) {
      if (!(w & Q)) ++inP;
      if (!(w & P)) ++inQ;
    }
    if (inP * inQ == static_cast<long long>(elems.size())) return false;
  }
  return true;
}

namespace {

uint32_t bit_reverse(uint32_t v, int n) {
  uint32_t out = 0;
  for (int i = 0; i < n; ++i)
    if ((v >> i) & 1u) out |= 1u << (n - 1 - i);
  return out;
}

// Key whose lexicographic order is the order of the generator strings.
std::vector<uint32_t> string_key(const Code& G) {
  std::vector<uint32_t> k;
  for (uint32_t g : G.gens()) k.push_back(bit_reverse(g, G.n()));
  return k;
}

}  // namespace

Code canonical_form(const Code& G) {
  if (G.r() != 0) throw std::invalid_argument("canonical_form expects a plain code");
  if (G.n() > 8) throw std::invalid_argument("canonical_form limited to length 8");
  std::vector<int> perm(G.n());
  std::iota(perm.begin(), perm.end(), 0);
  Code best = G;
  auto best_key = string_key(G);
  do {
    Code c = permute(G, perm);
    auto k = string_key(c);
    if (k < best_key) {
      best_key = k;
      best = c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Word> weight2_orthogonal_set(const Code& Gperp) {
  if (Gperp.r() != 0) throw std::invalid_argument("weight2_orthogonal_set expects a plain code");
  if (Gperp.n() > 8) throw std::invalid_argument("weight2_orthogonal_set limited to length 8");
  std::vector<uint32_t> w2;
  for (uint32_t w : Gperp.elements())
    if (popcount(w) == 2) w2.push_back(w);
  std::vector<uint32_t> best, cur;
  std::function<void(size_t, uint32_t)> go = [&](size_t i, uint32_t used) {
    if (cur.size() > best.size()) best = cur;
    for (size_t j = i; j < w2.size(); ++j) {
      if (w2[j] & used) continue;
      cur.push_back(w2[j]);
      go(j + 1, used | w2[j]);
      cur.pop_back();
    }
  };
  go(0, 0);
  std::vector<Word> out;
  for (uint32_t w : best) out.emplace_back(w, Gperp.l(), 0);
  return out;
}

}  // namespace artifact
