#pragma once
// Sector labels (d, c) for IS^(l,r): d marks 1/16 slots, c marks 1/2 slots.
#include <string>
#include <vector>

#include "artifact/bitcode.hpp"
#include "artifact/rational.hpp"

namespace artifact {

enum class IS : int { Zero = 0, Half = 1, Sigma = 2 };  // 0, 1/2, 1/16

Rational is_value(IS h);
std::string is_name(IS h);  // "0", "1/2", "1/16"
IS parse_is(const std::string& s);
std::vector<IS> fuse1(IS a, IS b);
std::vector<IS> intermediates1(IS h0, IS h1, IS h2, IS h3);

struct Sector {
  uint32_t d = 0;
  uint32_t c = 0;
  int l = 0;
  int r = 0;

  Sector() = default;
  Sector(const Word& d_, const Word& c_);
  Sector(uint32_t d_, uint32_t c_, int l_, int r_);
  static Sector vacuum(int l, int r) { return Sector(0u, 0u, l, r); }
  static Sector from_labels(const std::vector<IS>& labels, int l);

  int n() const { return l + r; }
  Word dword() const { return Word(d, l, r); }
  Word cword() const { return Word(c, l, r); }
  IS slot(int i) const;
  std::string str() const;  // "d=..|.. c=..|.."

  friend bool operator==(const Sector& a, const Sector& b) {
    return a.d == b.d && a.c == b.c && a.l == b.l && a.r == b.r;
  }
  friend bool operator<(const Sector& a, const Sector& b) {
    return a.d != b.d ? a.d < b.d : a.c < b.c;
  }
};

struct SectorWeight {
  Rational lwt, rwt, spin;
};

SectorWeight weight(const Sector& s);
std::vector<Sector> fuse(const Sector& a, const Sector& b);
bool in_fusion(const Sector& out, const Sector& a, const Sector& b);  // out in a * b
std::vector<Sector> intermediates(const Sector& s0, const Sector& s1, const Sector& s2, const Sector& s3);
std::vector<Sector> all_sectors(int l, int r);

}  // namespace artifact
