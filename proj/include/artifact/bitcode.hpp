#pragma once
// Binary words with a left/right split and linear codes over Z2.
#include <cstdint>
#include <string>
#include <vector>

namespace artifact {

constexpr int kMaxWordLen = 32;

// Coordinate i is bit i. Left coordinates are 0..l-1, right ones l..l+r-1.
struct Word {
  uint32_t bits = 0;
  int l = 0;
  int r = 0;

  Word() = default;
  Word(uint32_t b, int l_, int r_ = 0);

  int n() const { return l + r; }
  bool get(int i) const { return (bits >> i) & 1u; }
  uint32_t mask() const;
  uint32_t left_mask() const;
  Word complement() const { return Word(~bits & mask(), l, r); }  // d_perp
  std::string str() const;  // "110|100", no bar when r == 0

  friend bool operator==(const Word& a, const Word& b) { return a.bits == b.bits && a.l == b.l && a.r == b.r; }
  friend bool operator<(const Word& a, const Word& b) { return a.bits < b.bits; }
};

struct Weights {
  int wl = 0;
  int wr = 0;
  int signed_weight = 0;  // wl - wr
};

Word parse_word(const std::string& s);
Word word_mul(const Word& a, const Word& b);
Word word_add(const Word& a, const Word& b);
Weights weights(const Word& a);
Word delta_embed(const Word& g);  // g -> (g|g)
Word ones(int l, int r = 0);

inline uint32_t low_mask(int k) { return k >= 32 ? 0xffffffffu : ((1u << k) - 1); }
inline int popcount(uint32_t x) { return __builtin_popcount(x); }
inline int wl_of(uint32_t x, int l) { return popcount(x & low_mask(l)); }
inline int wr_of(uint32_t x, int l) { return l >= 32 ? 0 : popcount(x >> l); }
inline int signed_wt(uint32_t x, int l) { return wl_of(x, l) - wr_of(x, l); }

class Code {
 public:
  Code() = default;
  Code(int l, int r, const std::vector<uint32_t>& spanning);
  static Code from_words(const std::vector<Word>& ws, int l, int r);
  static Code full(int l, int r);

  int l() const { return l_; }
  int r() const { return r_; }
  int n() const { return l_ + r_; }
  int dim() const { return static_cast<int>(gens_.size()); }
  long long size() const { return 1LL << dim(); }
  const std::vector<uint32_t>& gens() const { return gens_; }  // reduced echelon basis
  std::vector<Word> gen_words() const;
  bool contains(uint32_t w) const;
  bool contains(const Word& w) const { return contains(w.bits); }
  bool contains_allones() const { return contains(ones(l_, r_).bits); }
  std::vector<uint32_t> elements() const;  // ascending
  std::string str() const;                 // "<110,011>"

  friend bool operator==(const Code& a, const Code& b) {
    return a.l_ == b.l_ && a.r_ == b.r_ && a.gens_ == b.gens_;
  }

 private:
  int l_ = 0;
  int r_ = 0;
  std::vector<uint32_t> gens_;
};

// Reduced row echelon basis; pivot of a row is its lowest set coordinate.
std::vector<uint32_t> rref(std::vector<uint32_t> rows);

Code dual_code(const Code& G);
Code delta_code(const Code& G);  // Delta G inside Z2^{r+r}
std::vector<long long> enumerator(const Code& G);
Code permute(const Code& G, const std::vector<int>& perm);  // coordinate i goes to perm[i]

// Coordinate classes of the finest orthogonal decomposition.
std::vector<std::vector<int>> components(const Code& G);
bool is_indecomposable(const Code& G);
bool is_indecomposable_bruteforce(const Code& G);

Code canonical_form(const Code& G);
std::vector<Word> weight2_orthogonal_set(const Code& Gperp);

}  // namespace artifact
