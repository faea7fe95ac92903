// Batch frontend: classify, build, verify, modular, blocks, monodromy, correlator, deform.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artifact/analytic.hpp"
#include "artifact/codecft.hpp"
#include "artifact/framed.hpp"
#include "artifact/io.hpp"

using namespace artifact;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::array<IS, 4> parse_labels(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 4) throw InputError("--labels needs four comma-separated labels");
  std::array<IS, 4> h;
  for (int i = 0; i < 4; ++i) h[i] = parse_is(parts[i]);
  return h;
}

cplx parse_complex(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.empty() || parts.size() > 2) throw InputError("complex numbers are written re or re,im");
  double re = std::stod(parts[0]), im = parts.size() == 2 ? std::stod(parts[1]) : 0.0;
  return {re, im};
}

PointConfig parse_points(const std::string& s) {
  auto parts = split(s, ';');
  if (parts.size() != 4) throw InputError("--points needs four points re,im separated by ';'");
  PointConfig p;
  for (int i = 0; i < 4; ++i) p.z[i] = parse_complex(parts[i]);
  p.validate();
  return p;
}

void emit(const json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << text;
  }
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"framed_forge: code CFT framed algebras, characters and correlators"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out, format = "json";
  int workers = 1;
  app.add_option("-o,--out", out, "output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "indecomposable codes of length r containing 1^r");
  int r = 0;
  classify->add_option("--r", r, "code length")->required()->check(CLI::Range(1, 6));
  classify->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* build = app.add_subcommand("build", "build S_G as algebra JSON");
  std::string code_in;
  build->add_option("--code", code_in, "code JSON file or inline JSON/literal")->required();

  auto* verify = app.add_subcommand("verify", "check FA1-FA4");
  std::string in;
  int fa4_limit = 10;
  verify->add_option("--in", in, "algebra JSON or code JSON")->required();
  verify->add_option("--fa4-limit", fa4_limit, "violations listed per axiom")->check(CLI::PositiveNumber);
  verify->add_option("--workers", workers, "FA4 worker threads")->check(CLI::Range(1, 256));

  auto* modular = app.add_subcommand("modular", "dimensions, currents and exact modular invariance");
  modular->add_option("--code", code_in, "code JSON file or inline JSON/literal")->required();

  auto* blocks = app.add_subcommand("blocks", "CSV grid of C(1,z) and ODE residuals");
  std::string labels, grid = "0.1:0.9:9";
  blocks->add_option("--labels", labels, "h0,h1,h2,h3 e.g. 1/16,1/16,1/16,1/16")->required();
  blocks->add_option("--grid", grid, "z_start:z_end:count, complex endpoints as re,im");

  auto* mono = app.add_subcommand("monodromy", "numeric connection matrix along gamma_0");
  int steps = 2000;
  double tol = 1e-9;
  mono->add_option("--labels", labels, "h0,h1,h2,h3")->required();
  mono->add_option("--steps", steps, "base step count")->check(CLI::PositiveNumber);
  mono->add_option("--tol", tol, "pass threshold on max_abs_err")->check(CLI::PositiveNumber);

  auto* corr = app.add_subcommand("correlator", "closed-form four-point function");
  std::string insertions, points;
  corr->add_option("--code", code_in, "code JSON file or inline JSON/literal")->required();
  corr->add_option("--insertions", insertions,
                   "d:w0,w1,w2,w3 with w in Delta G (default d:all-ones) or e:a0,a1,a2,a3 with a in G-perp");
  corr->add_option("--points", points, "z0;z1;z2;z3 each re,im")->required();

  auto* deform = app.add_subcommand("deform", "current-current deformed four-point function");
  std::string sigma_in, signs;
  deform->add_option("--code", code_in, "code JSON file or inline JSON/literal")->required();
  deform->add_option("--sigma", sigma_in, "JSON file or inline JSON: 2N x 2N matrix")->required();
  deform->add_option("--signs", signs, "four sign strings like ++,--,+-,-+")->required();
  deform->add_option("--points", points, "z0;z1;z2;z3 each re,im")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*classify) {
      const auto codes = classify_codes(r);
      if (format == "json") {
        json rows = json::array();
        for (const Code& G : codes)
          rows.push_back({{"code", G.str()}, {"dim", dims(G).total}, {"currents", currents(G)},
                          {"enumerator", enumerator(G)}});
        emit({{"r", r}, {"codes", rows}}, out);
      } else {
        std::ostringstream os;
        const char sep = format == "csv" ? ',' : '\t';
        os << "code" << sep << "dim" << sep << "currents" << sep << "enumerator\n";
        for (const Code& G : codes) {
          os << '"' << G.str() << '"' << sep << dims(G).total << sep << currents(G) << sep;
          auto N = enumerator(G);
          for (size_t k = 0; k < N.size(); ++k) os << (k ? " " : "") << N[k];
          os << "\n";
        }
        if (out.empty())
          std::cout << os.str();
        else
          std::ofstream(out) << os.str();
      }
      return 0;
    }

    if (*build) {
      Code G = code_from_json(parse_json_arg(code_in));
      emit(algebra_to_json(build_SG(G)), out);
      return 0;
    }

    if (*verify) {
      json j = parse_json_arg(in);
      FramedAlgebra S = (j.is_string() || j.contains("generators")) ? build_SG(code_from_json(j)) : algebra_from_json(j);
      VerifyOptions opt;
      opt.max_violations = fa4_limit;
      opt.workers = workers;
      auto reps = verify_axioms(S, opt);
      bool ok = true;
      json arr = json::array();
      for (const auto& rep : reps) {
        ok = ok && rep.pass();
        arr.push_back(report_to_json(rep, S));
      }
      emit({{"dim", S.size()}, {"pass", ok}, {"reports", arr}}, out);
      return ok ? 0 : 1;
    }

    if (*modular) {
      Code G = code_from_json(parse_json_arg(code_in));
      json j = code_summary(G);
      emit(j, out);
      return j["modular_invariant"].get<bool>() ? 0 : 1;
    }

    if (*blocks) {
      auto h = parse_labels(labels);
      auto g = split(grid, ':');
      if (g.size() != 3) throw InputError("--grid needs start:end:count");
      cplx a = parse_complex(g[0]), b = parse_complex(g[1]);
      int n = std::stoi(g[2]);
      if (n < 1) throw InputError("grid count must be positive");
      std::ostringstream os;
      os << "z_re,z_im,h,value_re,value_im,ode_residual\n";
      for (int k = 0; k < n; ++k) {
        cplx z = n == 1 ? a : a + (b - a) * (double(k) / (n - 1));
        for (IS m : intermediates1(h[0], h[1], h[2], h[3])) {
          cplx v = eval_block(h[0], h[1], h[2], h[3], m, 1.0, z);
          std::string res = h[3] == IS::Zero ? "" : num(ode_residual(h[0], h[1], h[2], h[3], m, z));
          os << num(z.real()) << ',' << num(z.imag()) << ',' << is_name(m) << ',' << num(v.real()) << ','
             << num(v.imag()) << ',' << res << "\n";
        }
      }
      if (out.empty())
        std::cout << os.str();
      else
        std::ofstream(out) << os.str();
      return 0;
    }

    if (*mono) {
      auto h = parse_labels(labels);
      MonodromyOptions opt;
      opt.steps = steps;
      auto m = continue_gamma0(h[0], h[1], h[2], h[3], opt);
      json j = monodromy_to_json(m);
      j["tolerance"] = tol;
      j["pass"] = m.max_abs_err < tol;
      emit(j, out);
      return m.max_abs_err < tol ? 0 : 1;
    }

    if (*corr) {
      Code G = code_from_json(parse_json_arg(code_in));
      PointConfig p = parse_points(points);
      const int n = G.n();
      json j;
      j["code"] = G.str();
      if (insertions.empty() || insertions.rfind("d:", 0) == 0) {
        std::array<Word, 4> d;
        if (insertions.empty()) {
          d.fill(ones(n, n));
        } else {
          auto w = split(insertions.substr(2), ',');
          if (w.size() != 4) throw InputError("d: needs four words");
          for (int i = 0; i < 4; ++i) d[i] = parse_word(w[i]);
        }
        double v = four_point_code(G, d, p);
        j["kind"] = "twist";
        j["value"] = {v, 0.0};
      } else if (insertions.rfind("e:", 0) == 0) {
        auto w = split(insertions.substr(2), ',');
        if (w.size() != 4) throw InputError("e: needs four words");
        std::array<uint32_t, 4> a;
        for (int i = 0; i < 4; ++i) {
          Word x = parse_word(w[i]);
          if (x.n() != n || x.r != 0) throw InputError("e: words must have length r");
          a[i] = x.bits;
        }
        cplx v = four_point_C(G, a, p);
        j["kind"] = "current";
        j["value"] = {v.real(), v.imag()};
      } else {
        throw InputError("--insertions must start with d: or e:");
      }
      emit(j, out);
      return 0;
    }

    if (*deform) {
      Code G = code_from_json(parse_json_arg(code_in));
      json sj = parse_json_arg(sigma_in);
      if (!sj.is_array() || sj.empty()) throw InputError("sigma must be a JSON matrix");
      const int dim = static_cast<int>(sj.size());
      if (dim % 2) throw InputError("sigma must be 2N x 2N");
      DeformParams dp;
      dp.N = dim / 2;
      dp.sigma.resize(dim, dim);
      for (int i = 0; i < dim; ++i) {
        if (!sj[i].is_array() || static_cast<int>(sj[i].size()) != dim) throw InputError("sigma must be square");
        for (int k = 0; k < dim; ++k) dp.sigma(i, k) = sj[i][k].get<double>();
      }
      auto sv = split(signs, ',');
      if (sv.size() != 4) throw InputError("--signs needs four sign strings");
      for (int i = 0; i < 4; ++i)
        for (char c : sv[i]) {
          if (c != '+' && c != '-') throw InputError("signs are + or -");
          dp.s[i].push_back(c == '+' ? 1 : -1);
        }
      PointConfig p = parse_points(points);
      cplx v = deformed_four_point(G, dp, p);
      Eigen::Matrix4d E = deform_exponents(dp, G.n());
      json ex = json::array();
      for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) ex.push_back({{"i", i}, {"j", k}, {"exponent", E(i, k)}});
      emit({{"code", G.str()}, {"N", dp.N}, {"value", {v.real(), v.imag()}}, {"exponents", ex},
            {"sigma_tolerance", 1e-10}},
           out);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
