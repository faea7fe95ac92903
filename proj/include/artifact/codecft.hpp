#pragma once
// The framed algebra S_G of a code G with 1^r in G, its characters, and the code tables.
#include <map>
#include <string>
#include <vector>

#include "artifact/bitcode.hpp"
#include "artifact/cyclo.hpp"
#include "artifact/framed.hpp"
#include "artifact/sectors.hpp"

namespace artifact {

// Bilinear cocycle on the even words of Z2^{r+r}, stored as a bit matrix over the basis
// (De_1..De_r, e_1+e_2, ..., e_{r-1}+e_r), the last r-1 vectors living on the left half.
class Cocycle {
 public:
  explicit Cocycle(int r);
  int r() const { return r_; }
  int rank() const { return 2 * r_ - 1; }
  const std::vector<uint32_t>& basis() const { return V_; }
  bool entry(int i, int j) const { return (E_[i] >> j) & 1u; }
  uint32_t coords(uint32_t alpha) const;  // throws unless |alpha| is even
  int epsilon(uint32_t a, uint32_t b) const;
  int epsilon(const Word& a, const Word& b) const;

 private:
  int r_;
  std::vector<uint32_t> V_;
  std::vector<uint32_t> E_;
};

class SG {
 public:
  explicit SG(const Code& G);  // throws std::invalid_argument unless 1^r in G

  int r() const { return r_; }
  const Code& code() const { return G_; }
  const Cocycle& cocycle() const { return coc_; }
  int size() const { return static_cast<int>(basis_.size()); }
  uint32_t d_of(int i) const { return basis_[i].first; }
  uint32_t alpha_of(int i) const { return basis_[i].second; }
  Sector sector(int i) const;
  std::string label(int i) const;  // "e[alpha]t[d]"
  int index(uint32_t d, uint32_t alpha) const;  // -1 if not a basis label

  Vec product(int i, int j) const;
  FramedAlgebra algebra() const;  // fills all products

 private:
  std::pair<int, uint32_t> reduce(uint32_t d, uint32_t beta) const;
  int r_;
  Code G_;
  Cocycle coc_;
  std::vector<std::pair<uint32_t, uint32_t>> basis_;
  std::map<std::pair<uint32_t, uint32_t>, int> index_;
};

FramedAlgebra build_SG(const Code& G);

struct Dims {
  std::map<uint32_t, long long> by_d;  // d in Delta G -> dimension
  long long total = 0;
  long long from_enumerator = 0;  // 2^{2r - dim G} P_G(1/2)
};
Dims dims(const Code& G);

using CharacterVector = std::map<Sector, Cyclo>;
CharacterVector character(const FramedAlgebra& S);
CharacterVector character(const SG& S);
CharacterVector character_formula(const Code& G);  // sum over D_G, C_G of 2^{-|d|_l} theta_(d, d_perp alpha)
CharacterVector s_transform(const CharacterVector& Z, int l, int r);
bool verify_modular(const Code& G);

std::vector<Code> classify_codes(int r);  // indecomposable codes containing 1^r, canonical, by dim S_G descending
std::vector<Code> all_subcodes(int r);    // every subspace of Z2^r
long long currents(const Code& G);

struct QSeries {
  Rational leading;               // exponent of the first coefficient
  std::vector<long long> coeffs;  // coefficient of q^{leading + k}
};
QSeries q_character(IS h, int N);

}  // namespace artifact
