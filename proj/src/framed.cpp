#include "artifact/framed.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "artifact/connection.hpp"

namespace artifact {

// ---- container ----

int FramedAlgebra::add_basis(const std::string& id, const Sector& s) {
  if (s.l != l_ || s.r != r_) throw std::invalid_argument("basis sector has wrong (l,r)");
  if (index_of(id) >= 0) throw std::invalid_argument("duplicate basis id '" + id + "'");
  ids_.push_back(id);
  sectors_.push_back(s);
  grow();
  return size() - 1;
}

int FramedAlgebra::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (ids_[i] == id) return i;
  return -1;
}

void FramedAlgebra::grow() {
  const int n = size();
  std::vector<Vec> p(size_t(n) * n);
  for (int i = 0; i < stride_; ++i)
    for (int j = 0; j < stride_; ++j) p[size_t(i) * n + j] = std::move(prod_[size_t(i) * stride_ + j]);
  prod_ = std::move(p);
  stride_ = n;
}

void FramedAlgebra::set_product(int i, int j, Vec terms) {
  if (i < 0 || j < 0 || i >= size() || j >= size()) throw std::out_of_range("product index");
  for (const auto& t : terms)
    if (t.k < 0 || t.k >= size()) throw std::out_of_range("product term index");
  prod_[size_t(i) * stride_ + j] = normalize(std::move(terms));
}

const Vec& FramedAlgebra::product(int i, int j) const { return prod_[size_t(i) * stride_ + j]; }

Vec normalize(Vec v) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
  Vec out;
  for (auto& t : v) {
    if (!out.empty() && out.back().k == t.k)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff.is_zero(); }), out.end());
  return out;
}

static bool is_one(const Cyclo& c) { return c == Cyclo(1); }

static void axpy(Vec& acc, const Cyclo& a, const Vec& v) {
  for (const auto& t : v) acc.push_back({t.k, is_one(a) ? t.coeff : (is_one(t.coeff) ? a : a * t.coeff)});
}

Vec FramedAlgebra::mul(int i, const Vec& v) const {
  Vec acc;
  for (const auto& t : v) axpy(acc, t.coeff, product(i, t.k));
  return normalize(std::move(acc));
}

Vec FramedAlgebra::mul(const Vec& v, int j) const {
  Vec acc;
  for (const auto& t : v) axpy(acc, t.coeff, product(t.k, j));
  return normalize(std::move(acc));
}

Vec project(const Vec& v, const FramedAlgebra& S, const Sector& s) {
  Vec out;
  for (const auto& t : v)
    if (S.sector(t.k) == s) out.push_back(t);
  return out;
}

// ---- helpers ----

namespace {

bool spin_integral(const Sector& s) {
  // spin = (|d|_l - |d|_r)/16 + (|c|_l - |c|_r)/2
  long long num = signed_wt(s.d, s.l) + 8LL * signed_wt(s.c, s.l);
  return num % 16 == 0;
}

int spin_parity(const Sector& s) {
  long long num = signed_wt(s.d, s.l) + 8LL * signed_wt(s.c, s.l);
  long long sp = num / 16;
  return static_cast<int>(((sp % 2) + 2) % 2);
}

void record(VerifierReport& rep, const VerifyOptions& opt, Violation v) {
  ++rep.violation_count;
  if (static_cast<int>(rep.violations.size()) < opt.max_violations) rep.violations.push_back(std::move(v));
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].k != b[i].k || !(a[i].coeff == b[i].coeff)) return false;
  return true;
}

// group a vector by sector; sector ids are positions in a sorted sector list
struct SectorIndex {
  std::vector<Sector> list;
  std::vector<int> of;  // basis index -> sector id
  explicit SectorIndex(const FramedAlgebra& S) {
    for (int i = 0; i < S.size(); ++i) list.push_back(S.sector(i));
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (int i = 0; i < S.size(); ++i)
      of.push_back(static_cast<int>(std::lower_bound(list.begin(), list.end(), S.sector(i)) - list.begin()));
  }
  std::vector<std::pair<int, Vec>> split(const Vec& v) const {
    std::vector<std::pair<int, Vec>> out;
    for (const auto& t : v) {
      int s = of[t.k];
      auto it = std::find_if(out.begin(), out.end(), [s](const auto& p) { return p.first == s; });
      if (it == out.end()) {
        out.push_back({s, {}});
        it = out.end() - 1;
      }
      it->second.push_back(t);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  int find(const Sector& s) const {
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || !(*it == s)) return -1;
    return static_cast<int>(it - list.begin());
  }
};

bool witness_less(const Violation& a, const Violation& b) { return a.witness < b.witness; }

void merge_reports(VerifierReport& into, std::vector<VerifierReport>& parts, const VerifyOptions& opt) {
  std::vector<Violation> all;
  for (auto& p : parts) {
    into.checked += p.checked;
    into.violation_count += p.violation_count;
    for (auto& v : p.violations) all.push_back(std::move(v));
  }
  std::sort(all.begin(), all.end(), witness_less);
  if (static_cast<int>(all.size()) > opt.max_violations) all.resize(opt.max_violations);
  into.violations = std::move(all);
}

template <class F>
void run_workers(int workers, int total, F&& body) {
  workers = std::max(1, std::min(workers, total));
  if (workers == 1) {
    for (int i = 0; i < total; ++i) body(0, i);
    return;
  }
  std::vector<std::thread> th;
  for (int w = 0; w < workers; ++w)
    th.emplace_back([&, w] {
      for (int i = w; i < total; i += workers) body(w, i);
    });
  for (auto& t : th) t.join();
}

}  // namespace

// ---- FA1..FA4 ----

std::vector<VerifierReport> verify_axioms(const FramedAlgebra& S, const VerifyOptions& opt) {
  std::vector<VerifierReport> out;
  const int N = S.size();

  VerifierReport fa1{"FA1"};
  for (int i = 0; i < N; ++i) {
    ++fa1.checked;
    if (!spin_integral(S.sector(i))) record(fa1, opt, {{i}, "non-integral spin in sector " + S.sector(i).str(), {}, {}});
  }
  out.push_back(fa1);

  VerifierReport fa2{"FA2"};
  const int u = S.unit();
  const Sector vac = Sector::vacuum(S.l(), S.r());
  ++fa2.checked;
  if (u < 0 || u >= N || !(S.sector(u) == vac)) {
    record(fa2, opt, {{u}, "unit missing or not in the vacuum sector", {}, {}});
  } else {
    for (int i = 0; i < N; ++i)
      if (i != u && S.sector(i) == vac) record(fa2, opt, {{i}, "vacuum sector is more than one-dimensional", {}, {}});
    for (int i = 0; i < N; ++i) {
      fa2.checked += 2;
      Vec e{{i, Cyclo(1)}};
      if (!vec_equal(S.product(u, i), e)) record(fa2, opt, {{u, i}, "1.a != a", e, S.product(u, i)});
      if (!vec_equal(S.product(i, u), e)) record(fa2, opt, {{i, u}, "a.1 != a", e, S.product(i, u)});
    }
  }
  out.push_back(fa2);

  VerifierReport fa3{"FA3"};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      ++fa3.checked;
      for (const auto& t : S.product(i, j))
        if (!in_fusion(S.sector(t.k), S.sector(i), S.sector(j))) {
          record(fa3, opt, {{i, j, t.k}, "product term outside the fusion product", {}, S.product(i, j)});
          break;
        }
    }
  out.push_back(fa3);

  bool structural = fa2.pass() && fa3.pass();
  if (structural) {
    out.push_back(verify_fa4(S, opt));
  } else {
    VerifierReport fa4{"FA4"};
    record(fa4, opt, {{}, "skipped: FA2/FA3 failed", {}, {}});
    out.push_back(fa4);
  }
  return out;
}

VerifierReport verify_fa4(const FramedAlgebra& S, const VerifyOptions& opt) {
  const int N = S.size();
  const SectorIndex SI(S);
  std::vector<VerifierReport> parts(std::max(1, opt.workers));
  for (auto& p : parts) p.axiom = "FA4";

  // products grouped by sector, computed once
  std::vector<std::vector<std::pair<int, Vec>>> grouped(size_t(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) grouped[size_t(i) * N + j] = SI.split(S.product(i, j));

  run_workers(opt.workers, N, [&](int w, int a3) {
    VerifierReport& rep = parts[w];
    const Sector& s3 = S.sector(a3);
    for (int a2 = 0; a2 < N; ++a2) {
      const Sector& s2 = S.sector(a2);
      const auto& P23 = grouped[size_t(a2) * N + a3];
      for (int a1 = 0; a1 < N; ++a1) {
        const Sector& s1 = S.sector(a1);
        const auto& P13 = grouped[size_t(a1) * N + a3];
        // R[l0][lam] = a1 ._l0 (a2 ._lam a3), L[l0][lamp] = a2 ._l0 (a1 ._lamp a3)
        std::map<int, std::vector<std::pair<int, Vec>>> R, L;
        for (const auto& [lam, v] : P23)
          for (auto& [l0, w0] : SI.split(S.mul(a1, v))) R[l0].push_back({lam, std::move(w0)});
        for (const auto& [lamp, v] : P13)
          for (auto& [l0, w0] : SI.split(S.mul(a2, v))) L[l0].push_back({lamp, std::move(w0)});
        std::vector<int> keys;
        for (auto& kv : R) keys.push_back(kv.first);
        for (auto& kv : L) keys.push_back(kv.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (int l0 : keys) {
          const Sector& s0 = SI.list[l0];
          const auto A = intermediates(s0, s1, s2, s3);
          const auto Ap = intermediates(s0, s2, s1, s3);
          const auto& Rl = R[l0];
          const auto& Ll = L[l0];
          for (const auto& lamp : Ap) {
            const int lp = SI.find(lamp);
            Vec lhs;
            for (const auto& [k, v] : Ll)
              if (k == lp) lhs = v;
            Vec rhs;
            for (const auto& lam : A) {
              const int li = SI.find(lam);
              if (li < 0) continue;
              for (const auto& [k, v] : Rl) {
                if (k != li) continue;
                axpy(rhs, multi_B_product(s0, s1, s2, s3, lam, lamp), v);
              }
            }
            rhs = normalize(std::move(rhs));
            ++rep.checked;
            if (!vec_equal(lhs, rhs))
              record(rep, opt,
                     {{a1, a2, a3, l0, lp},
                      "FA4 fails for lambda0=" + s0.str() + " lambda'=" + lamp.str(), rhs, lhs});
          }
          // a nonzero a2 ._l0 (a1 ._lamp a3) with lamp outside A' cannot be balanced
          for (const auto& [k, v] : Ll) {
            bool inside = std::any_of(Ap.begin(), Ap.end(), [&](const Sector& x) { return SI.find(x) == k; });
            if (!inside) record(rep, opt, {{a1, a2, a3, l0, k}, "lhs component outside A'", {}, v});
          }
        }
      }
    }
  });

  VerifierReport rep{"FA4"};
  merge_reports(rep, parts, opt);
  return rep;
}

VerifierReport check_commutativity(const FramedAlgebra& S, const VerifyOptions& opt) {
  VerifierReport rep{"commutativity"};
  const int N = S.size();
  const SectorIndex SI(S);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Sector &s1 = S.sector(i), &s2 = S.sector(j);
      for (const auto& s0 : fuse(s1, s2)) {
        if (SI.find(s0) < 0) continue;
        ++rep.checked;
        Vec a = project(S.product(i, j), S, s0);
        Vec b = project(S.product(j, i), S, s0);
        int par = (spin_parity(s0) + spin_parity(s1) + spin_parity(s2)) % 2;
        if (par) {
          for (auto& t : b) t.coeff = -t.coeff;
        }
        if (!vec_equal(a, b)) record(rep, opt, {{i, j, SI.find(s0)}, "signed commutativity fails", b, a});
      }
    }
  return rep;
}

VerifierReport check_associativity(const FramedAlgebra& S, const VerifyOptions& opt) {
  // a1 ._l0 (a2 ._mu' a3) = sum_mu (-1)^{s(mu')+s(mu)+s(l2)+s(l0)} B_{l0,l3,l1,l2}^{mu,mu'} (a1 ._mu a2) ._l0 a3
  const int N = S.size();
  const SectorIndex SI(S);
  std::vector<VerifierReport> parts(std::max(1, opt.workers));
  run_workers(opt.workers, N, [&](int w, int a1) {
    VerifierReport& rep = parts[w];
    const Sector& s1 = S.sector(a1);
    for (int a2 = 0; a2 < N; ++a2) {
      const Sector& s2 = S.sector(a2);
      auto P12 = SI.split(S.product(a1, a2));
      for (int a3 = 0; a3 < N; ++a3) {
        const Sector& s3 = S.sector(a3);
        auto P23 = SI.split(S.product(a2, a3));
        for (const auto& [mup, v23] : P23) {
          const Sector& smup = SI.list[mup];
          for (auto& [l0, lhs] : SI.split(S.mul(a1, v23))) {
            const Sector& s0 = SI.list[l0];
            Vec rhs;
            for (const auto& mu : intermediates(s0, s3, s1, s2)) {
              const int mi = SI.find(mu);
              for (const auto& [k, v12] : P12) {
                if (k != mi) continue;
                Vec t = project(S.mul(v12, a3), S, s0);
                Cyclo B = multi_B_product(s0, s3, s1, s2, mu, smup);
                int par = (spin_parity(smup) + spin_parity(mu) + spin_parity(s2) + spin_parity(s0)) % 2;
                if (par) B = -B;
                axpy(rhs, B, t);
              }
            }
            rhs = normalize(std::move(rhs));
            ++rep.checked;
            if (!vec_equal(lhs, rhs)) record(rep, opt, {{a1, a2, a3, l0, mup}, "associativity relation", rhs, lhs});
          }
        }
      }
    }
  });
  VerifierReport rep{"associativity"};
  merge_reports(rep, parts, opt);
  return rep;
}

VerifierReport check_nonzero_products(const FramedAlgebra& S) {
  VerifierReport rep{"nonzero-products"};
  VerifyOptions opt;
  for (int i = 0; i < S.size(); ++i)
    for (int j = 0; j < S.size(); ++j) {
      ++rep.checked;
      if (S.product(i, j).empty()) record(rep, opt, {{i, j}, "product of basis elements vanishes", {}, {}});
    }
  return rep;
}

// ---- bilinear form ----

std::vector<std::vector<Cyclo>> bilinear_form(const FramedAlgebra& S) {
  const int N = S.size(), u = S.unit();
  std::vector<std::vector<Cyclo>> g(N, std::vector<Cyclo>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (const auto& t : S.product(i, j))
        if (t.k == u) g[i][j] = spin_parity(S.sector(i)) ? -t.coeff : t.coeff;
  return g;
}

VerifierReport check_bilinear(const FramedAlgebra& S) {
  VerifierReport rep{"bilinear"};
  VerifyOptions opt;
  const int N = S.size();
  auto g = bilinear_form(S);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      ++rep.checked;
      if (!(g[i][j] == g[j][i])) record(rep, opt, {{i, j}, "form not symmetric", {}, {}});
      if (!g[i][j].is_zero() && !(S.sector(i) == S.sector(j)))
        record(rep, opt, {{i, j}, "different sectors pair nontrivially", {}, {}});
    }
  // (a1.a2, a3) = (-1)^{s(l1)} (a2, a1.a3)
  auto form = [&](const Vec& v, int j) {
    Cyclo s;
    for (const auto& t : v)
      if (!g[t.k][j].is_zero()) s += t.coeff * g[t.k][j];
    return s;
  };
  auto form2 = [&](int i, const Vec& v) {
    Cyclo s;
    for (const auto& t : v)
      if (!g[i][t.k].is_zero()) s += t.coeff * g[i][t.k];
    return s;
  };
  for (int a1 = 0; a1 < N; ++a1)
    for (int a2 = 0; a2 < N; ++a2)
      for (int a3 = 0; a3 < N; ++a3) {
        ++rep.checked;
        Cyclo lhs = form(S.product(a1, a2), a3);
        Cyclo rhs = form2(a2, S.product(a1, a3));
        if (spin_parity(S.sector(a1))) rhs = -rhs;
        if (!(lhs == rhs)) record(rep, opt, {{a1, a2, a3}, "form not invariant", {}, {}});
      }
  return rep;
}

int exact_rank(std::vector<std::vector<Cyclo>> m) {
  const int rows = static_cast<int>(m.size());
  if (!rows) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    Cyclo inv = m[rank][c].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Cyclo f = m[r][c] * inv;
      for (int k = c; k < cols; ++k)
        if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool is_simple(const FramedAlgebra& S) {
  // the form is block diagonal over sectors, so take ranks block by block
  auto g = bilinear_form(S);
  const SectorIndex SI(S);
  int total = 0;
  for (size_t s = 0; s < SI.list.size(); ++s) {
    std::vector<int> idx;
    for (int i = 0; i < S.size(); ++i)
      if (SI.of[i] == static_cast<int>(s)) idx.push_back(i);
    std::vector<std::vector<Cyclo>> b(idx.size(), std::vector<Cyclo>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) b[i][j] = g[idx[i]][idx[j]];
    total += exact_rank(b);
  }
  for (int i = 0; i < S.size(); ++i)
    for (int j = 0; j < S.size(); ++j)
      if (SI.of[i] != SI.of[j] && !g[i][j].is_zero()) return false;  // not a graded form
  return total == S.size();
}

StructureCodes structure_codes(const FramedAlgebra& S) {
  std::vector<uint32_t> D, C;
  for (int i = 0; i < S.size(); ++i) {
    const Sector& s = S.sector(i);
    D.push_back(s.d);
    if (s.d == 0) C.push_back(s.c);
  }
  StructureCodes out;
  out.D = Code(S.l(), S.r(), D);
  out.C = Code(S.l(), S.r(), C);
  // subgroup checks: the supports themselves must already be closed
  auto closed = [&](const Code& code, bool dpart) {
    for (uint32_t w : code.elements()) {
      bool found = false;
      for (int i = 0; i < S.size() && !found; ++i) {
        const Sector& s = S.sector(i);
        found = dpart ? s.d == w : (s.d == 0 && s.c == w);
      }
      if (!found) return false;
    }
    return true;
  };
  bool ok = closed(out.D, true) && closed(out.C, false);
  for (uint32_t a : out.C.elements()) {
    if (signed_wt(a, S.l()) % 2 != 0) ok = false;
    for (uint32_t d : out.D.elements())
      if (signed_wt(a & d, S.l()) % 2 != 0) ok = false;
  }
  out.even_ok = ok;
  return out;
}

// ---- examples ----

FramedAlgebra ising_algebra() {
  FramedAlgebra S(1, 1);
  int one = S.add_basis("1", Sector::vacuum(1, 1));
  int a = S.add_basis("a", Sector(0u, 3u, 1, 1));
  int d = S.add_basis("d", Sector(3u, 0u, 1, 1));
  S.set_unit(one);
  auto e = [](int k) { return Vec{{k, Cyclo(1)}}; };
  for (int i : {one, a, d}) {
    S.set_product(one, i, e(i));
    S.set_product(i, one, e(i));
  }
  S.set_product(a, a, e(one));
  S.set_product(a, d, e(d));
  S.set_product(d, a, e(d));
  S.set_product(d, d, {{one, Cyclo(1)}, {a, Cyclo(1)}});
  return S;
}

FramedAlgebra twisted_group_algebra(const Code& C) {
  const int l = C.l();
  const auto& basis = C.gens();
  const int k = static_cast<int>(basis.size());
  for (uint32_t v : basis)
    if (signed_wt(v, l) % 2 != 0) throw std::invalid_argument("twisted group algebra needs an even code");
  // bilinear cocycle on the echelon basis: diagonal |v|/2, lower triangle |v_i v_j|
  std::vector<uint32_t> E(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int bit = 0;
      if (i == j) bit = ((signed_wt(basis[i], l) / 2) % 2 + 2) % 2;
      if (i > j) bit = popcount(basis[i] & basis[j]) % 2;
      if (bit) E[i] |= 1u << j;
    }
  auto coords = [&](uint32_t w) {
    uint32_t c = 0;
    for (int i = 0; i < k; ++i)
      if ((w >> __builtin_ctz(basis[i])) & 1u) c |= 1u << i;
    return c;
  };
  auto eps = [&](uint32_t a, uint32_t b) {
    uint32_t ca = coords(a), cb = coords(b);
    int t = 0;
    for (int i = 0; i < k; ++i)
      if ((ca >> i) & 1u) t ^= popcount(E[i] & cb) & 1;
    return t ? -1 : 1;
  };
  FramedAlgebra S(C.l(), C.r());
  auto elems = C.elements();
  for (uint32_t a : elems) S.add_basis("e" + Word(a, C.l(), C.r()).str(), Sector(0u, a, C.l(), C.r()));
  S.set_unit(0);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      uint32_t s = elems[i] ^ elems[j];
      int kk = static_cast<int>(std::lower_bound(elems.begin(), elems.end(), s) - elems.begin());
      S.set_product(static_cast<int>(i), static_cast<int>(j), {{kk, Cyclo(eps(elems[i], elems[j]))}});
    }
  return S;
}

}  // namespace artifact
