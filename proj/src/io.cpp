#include "artifact/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace artifact {

namespace {

std::string plain_word(uint32_t bits, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += ((bits >> i) & 1u) ? '1' : '0';
  return s;
}

Code code_from_literal(const std::string& lit) {
  std::string body = lit;
  if (!body.empty() && body.front() == '<') body = body.substr(1);
  if (!body.empty() && body.back() == '>') body.pop_back();
  std::vector<uint32_t> rows;
  int n = -1;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Word w = parse_word(item);
    if (w.r != 0) throw std::invalid_argument("code literal words must not be split");
    if (n >= 0 && w.l != n) throw std::invalid_argument("code generators have different lengths");
    n = w.l;
    rows.push_back(w.bits);
  }
  if (n <= 0) throw std::invalid_argument("empty code literal");
  return Code(n, 0, rows);
}

}  // namespace

Code code_from_json(const json& j) {
  if (j.is_string()) return code_from_literal(j.get<std::string>());
  if (!j.is_object() || !j.contains("generators")) throw std::invalid_argument("code JSON needs \"generators\"");
  const auto& gens = j.at("generators");
  if (!gens.is_array()) throw std::invalid_argument("\"generators\" must be an array");
  int r = j.contains("r") ? j.at("r").get<int>() : -1;
  std::vector<uint32_t> rows;
  for (const auto& g : gens) {
    Word w = parse_word(g.get<std::string>());
    if (w.r != 0) throw std::invalid_argument("code generators must not be split");
    if (r < 0) r = w.l;
    if (w.l != r) throw std::invalid_argument("generator length differs from r");
    rows.push_back(w.bits);
  }
  if (r < 1 || r > kMaxWordLen) throw std::invalid_argument("code length out of range");
  return Code(r, 0, rows);
}

json code_to_json(const Code& G) {
  json j;
  j["r"] = G.n();
  json g = json::array();
  for (uint32_t w : G.gens()) g.push_back(plain_word(w, G.n()));
  j["generators"] = g;
  j["str"] = G.str();
  return j;
}

json sector_to_json(const Sector& s) { return {{"d", s.dword().str()}, {"c", s.cword().str()}}; }

Sector sector_from_json(const json& j) {
  Word d = parse_word(j.at("d").get<std::string>()), c = parse_word(j.at("c").get<std::string>());
  return Sector(d, c);
}

json cyclo_to_json(const Cyclo& c) { return {{"exact", c.str()}, {"approx", c.approx()}}; }

Cyclo cyclo_from_json(const json& j) {
  if (j.is_number_integer()) return Cyclo(j.get<long long>());
  if (j.is_string()) return parse_cyclo(j.get<std::string>());
  if (j.is_object() && j.contains("exact")) return parse_cyclo(j.at("exact").get<std::string>());
  throw std::invalid_argument("coefficient must be an exact string or integer");
}

json algebra_to_json(const FramedAlgebra& S) {
  json j;
  j["l"] = S.l();
  j["r"] = S.r();
  json basis = json::array();
  for (int i = 0; i < S.size(); ++i) basis.push_back({{"id", S.id(i)}, {"sector", sector_to_json(S.sector(i))}});
  j["basis"] = basis;
  j["unit"] = S.unit() >= 0 ? json(S.id(S.unit())) : json(nullptr);
  json prods = json::array();
  for (int i = 0; i < S.size(); ++i)
    for (int k = 0; k < S.size(); ++k) {
      const Vec& v = S.product(i, k);
      if (v.empty()) continue;
      json terms = json::array();
      for (const Term& t : v) terms.push_back({{"k", S.id(t.k)}, {"coeff", t.coeff.str()}});
      prods.push_back({{"i", S.id(i)}, {"j", S.id(k)}, {"terms", terms}});
    }
  j["products"] = prods;
  return j;
}

FramedAlgebra algebra_from_json(const json& j) {
  try {
    FramedAlgebra S(j.at("l").get<int>(), j.at("r").get<int>());
    for (const auto& b : j.at("basis")) {
      Sector s = sector_from_json(b.at("sector"));
      if (s.l != S.l() || s.r != S.r()) throw std::invalid_argument("sector split differs from (l,r)");
      if (S.index_of(b.at("id").get<std::string>()) >= 0) throw std::invalid_argument("duplicate basis id");
      S.add_basis(b.at("id").get<std::string>(), s);
    }
    auto idx = [&](const json& id) {
      int k = S.index_of(id.get<std::string>());
      if (k < 0) throw std::invalid_argument("unknown basis id '" + id.get<std::string>() + "'");
      return k;
    };
    if (j.contains("unit") && !j.at("unit").is_null()) S.set_unit(idx(j.at("unit")));
    for (const auto& p : j.at("products")) {
      Vec v;
      for (const auto& t : p.at("terms")) v.push_back({idx(t.at("k")), cyclo_from_json(t.at("coeff"))});
      S.set_product(idx(p.at("i")), idx(p.at("j")), v);
    }
    return S;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra JSON: ") + e.what());
  }
}

json report_to_json(const VerifierReport& rep, const FramedAlgebra& S) {
  json j;
  j["axiom"] = rep.axiom;
  j["pass"] = rep.pass();
  j["checked"] = rep.checked;
  j["violation_count"] = rep.violation_count;
  json vs = json::array();
  auto vec_json = [&](const Vec& v) {
    json a = json::array();
    for (const Term& t : v) a.push_back({{"k", S.id(t.k)}, {"coeff", t.coeff.str()}});
    return a;
  };
  for (const Violation& v : rep.violations) {
    json w = json::array();
    for (int k : v.witness) w.push_back(k >= 0 && k < S.size() ? json(S.id(k)) : json(k));
    vs.push_back({{"witness", w}, {"detail", v.detail}, {"expected", vec_json(v.expected)}, {"found", vec_json(v.found)}});
  }
  j["violations"] = vs;
  return j;
}

json monodromy_to_json(const MonodromyResult& m) {
  json j;
  json lab = json::array();
  for (IS h : m.labels) lab.push_back(is_name(h));
  j["labels"] = lab;
  json rows = json::array(), cols = json::array();
  for (IS h : m.rows) rows.push_back(is_name(h));
  for (IS h : m.cols) cols.push_back(is_name(h));
  j["rows"] = rows;
  j["cols"] = cols;
  auto mat = [](const Eigen::MatrixXcd& M) {
    json a = json::array();
    for (int i = 0; i < M.rows(); ++i)
      for (int k = 0; k < M.cols(); ++k) a.push_back({M(i, k).real(), M(i, k).imag()});
    return a;
  };
  j["recovered"] = mat(m.recovered);
  j["expected"] = mat(m.expected);
  j["max_abs_err"] = m.max_abs_err;
  j["lsq_residual"] = m.lsq_residual;
  j["steps_taken"] = m.steps_taken;
  return j;
}

json code_summary(const Code& G) {
  json j;
  j["code"] = G.str();
  Dims d = dims(G);
  json by = json::array();
  for (const auto& [w, n] : d.by_d) by.push_back({{"d", Word(w, G.n(), G.n()).str()}, {"dim", n}});
  j["dims"] = {{"total", d.total}, {"by_d", by}};
  j["modular_invariant"] = verify_modular(G);
  j["currents"] = currents(G);
  j["enumerator"] = enumerator(G);
  return j;
}

json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  std::ifstream f(arg);
  if (f) {
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    // bare code literal like <111>
    if (!text.empty() && text.front() == '<') return json(text);
    throw std::invalid_argument("input is neither a readable file nor JSON: " + arg);
  }
}

}  // namespace artifact
