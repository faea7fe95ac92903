#pragma once
// Finite sector-graded algebras with Cyclo structure constants, and the FA1-FA4 verifier.
#include <string>
#include <utility>
#include <vector>

#include "artifact/bitcode.hpp"
#include "artifact/cyclo.hpp"
#include "artifact/sectors.hpp"

namespace artifact {

struct Term {
  int k;
  Cyclo coeff;
};
using Vec = std::vector<Term>;  // sparse, sorted by k, no zero coefficients

class FramedAlgebra {
 public:
  FramedAlgebra() = default;
  FramedAlgebra(int l, int r) : l_(l), r_(r) {}

  int l() const { return l_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(sectors_.size()); }

  int add_basis(const std::string& id, const Sector& s);
  void set_unit(int i) { unit_ = i; }
  int unit() const { return unit_; }
  const std::string& id(int i) const { return ids_[i]; }
  int index_of(const std::string& id) const;  // -1 if absent
  const Sector& sector(int i) const { return sectors_[i]; }

  void set_product(int i, int j, Vec terms);
  const Vec& product(int i, int j) const;  // e_i . e_j
  Vec mul(int i, const Vec& v) const;      // e_i . v
  Vec mul(const Vec& v, int j) const;      // v . e_j

 private:
  void grow();
  int l_ = 0;
  int r_ = 0;
  int unit_ = -1;
  std::vector<std::string> ids_;
  std::vector<Sector> sectors_;
  std::vector<Vec> prod_;  // row-major, size()*size()
  int stride_ = 0;
};

Vec normalize(Vec v);  // sort, merge, drop zeros
Vec project(const Vec& v, const FramedAlgebra& S, const Sector& s);

struct Violation {
  std::vector<int> witness;  // basis indices (and extra data as documented per suite)
  std::string detail;
  Vec expected;
  Vec found;
};

struct VerifierReport {
  std::string axiom;
  long long checked = 0;
  long long violation_count = 0;
  std::vector<Violation> violations;  // first K
  bool pass() const { return violation_count == 0; }
};

struct VerifyOptions {
  int max_violations = 10;
  int workers = 1;
};

// FA1, FA2, FA3 and FA4, in that order.
std::vector<VerifierReport> verify_axioms(const FramedAlgebra& S, const VerifyOptions& opt = {});
VerifierReport verify_fa4(const FramedAlgebra& S, const VerifyOptions& opt = {});
VerifierReport check_commutativity(const FramedAlgebra& S, const VerifyOptions& opt = {});
VerifierReport check_associativity(const FramedAlgebra& S, const VerifyOptions& opt = {});
VerifierReport check_nonzero_products(const FramedAlgebra& S);

// Gram matrix of (a,b)1 = (-1)^{s(lambda)} a ._0 b.
std::vector<std::vector<Cyclo>> bilinear_form(const FramedAlgebra& S);
VerifierReport check_bilinear(const FramedAlgebra& S);  // symmetry, sector orthogonality, invariance
int exact_rank(std::vector<std::vector<Cyclo>> m);
bool is_simple(const FramedAlgebra& S);

struct StructureCodes {
  Code D, C;
  bool even_ok = false;  // |alpha| even and |alpha d| even for alpha in C, d in D
};
StructureCodes structure_codes(const FramedAlgebra& S);

FramedAlgebra ising_algebra();  // 1, a, d with d.d = 1+a, a.d = d.a = d, a.a = 1
FramedAlgebra twisted_group_algebra(const Code& C);  // C[C-hat] for an even code with split

}  // namespace artifact
