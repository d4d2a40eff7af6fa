// qmb: command-line front end for the quantum matrix ball toolkit.
#include "qmb/checks.hpp"
#include "qmb/expr.hpp"
#include "qmb/report.hpp"
#include "qmb/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qmb;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  int m = 2;
  int n = 2;
  std::string q = "1/2";
  int cutoff = 4;
  std::string mode = "auto";
  std::string out;
  std::string format = "json";
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--m", c.m, "rows m (1 <= m <= n)")->capture_default_str();
  cmd->add_option("--n", c.n, "columns n")->capture_default_str();
  cmd->add_option("--q", c.q, "q as p/r")->capture_default_str();
  cmd->add_option("--cutoff", c.cutoff, "truncation degree D")->capture_default_str();
  cmd->add_option("--mode", c.mode, "exact | symbolic")->check(CLI::IsMember({"auto", "exact", "symbolic"}));
  cmd->add_option("--out", c.out, "write output to PATH instead of stdout");
  cmd->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_flag("--timing", c.timing, "include wall-clock seconds in reports");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + c.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

AlgebraConfig config_of(const Common& c) {
  AlgebraConfig cfg{c.m, c.n};
  cfg.validate();
  if (c.cutoff < 0) throw ConfigError("cutoff must be nonnegative");
  return cfg;
}

bool symbolic(const Common& c, bool default_symbolic) {
  if (c.mode == "auto") return default_symbolic;
  return c.mode == "symbolic";
}

// ------------------------------------------------------------------ commands

int cmd_dims(const Common& c, int max_degree) {
  const auto cfg = config_of(c);
  if (max_degree < 0) throw ConfigError("max-degree must be nonnegative");
  PolAlgebra<Rational> alg(cfg, Field<Rational>(Rational(1, 2)));
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "degree,dimension,binomial\n";
  bool ok = true;
  for (int k = 0; k <= max_degree; ++k) {
    const auto dim = alg.graded_basis(k, 0).size();
    const auto want = binomial(cfg.m * cfg.n + k - 1, k);
    ok = ok && static_cast<long long>(dim) == want;
    rows.push_back({{"degree", k}, {"dimension", dim}, {"binomial", want}});
    csv << k << "," << dim << "," << want << "\n";
  }
  Json j{{"m", cfg.m}, {"n", cfg.n}, {"dims", rows}};
  emit(c, c.format == "csv" ? csv.str() : dump(j));
  return ok ? kPass : kFail;
}

template <Scalar S>
int normal_form_with(const Common& c, const AlgebraConfig& cfg, const Field<S>& f, const std::string& text) {
  PolAlgebra<S> alg(cfg, f);
  const auto e = evaluate(*parse_expression(text, cfg), alg);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "word,coeff\n";
    for (const auto& [w, k] : e.terms()) os << csv_field(to_string(w)) << "," << csv_field(k.to_string()) << "\n";
    emit(c, os.str());
  } else {
    Json j{{"m", cfg.m}, {"n", cfg.n}, {"q", f.describe()}, {"input", text}, {"normal_form", to_string(e)},
           {"terms", element_json(e)}};
    emit(c, dump(j));
  }
  return kPass;
}

int cmd_normal_form(const Common& c, bool q_given, const std::string& text) {
  const auto cfg = config_of(c);
  // Pure algebra needs no numeric q, so the symbolic form is the default.
  const bool sym = c.mode == "auto" ? !q_given : c.mode == "symbolic";
  if (sym) return normal_form_with(c, cfg, Field<Laurent>(), text);
  return normal_form_with(c, cfg, Field<Rational>(parse_q(c.q, false)), text);
}

template <Scalar S>
int gram_with(const Common& c, const AlgebraConfig& cfg, const Field<S>& f, int k) {
  PolAlgebra<S> alg(cfg, f);
  FockSpace<S> fock(alg);
  const auto g = fock.gram(k);
  const auto& basis = fock.basis(k);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "basis";
    for (const auto& w : basis) os << "," << csv_field(to_string(w));
    os << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      os << csv_field(to_string(basis[i]));
      for (std::size_t j = 0; j < basis.size(); ++j) os << "," << csv_field(g(i, j).to_string());
      os << "\n";
    }
    emit(c, os.str());
    return kPass;
  }
  Json b = Json::array(), rows = Json::array();
  for (const auto& w : basis) b.push_back(to_string(w));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < basis.size(); ++j) row.push_back(g(i, j).to_string());
    rows.push_back(row);
  }
  Json j{{"m", cfg.m}, {"n", cfg.n}, {"q", f.describe()}, {"degree", k}, {"basis", b}, {"matrix", rows}};
  if constexpr (std::is_same_v<S, Rational>) {
    const auto l = ldlt(g);
    j["positive_definite"] = l.positive;
  }
  emit(c, dump(j));
  return kPass;
}

int cmd_gram(const Common& c, int k) {
  const auto cfg = config_of(c);
  if (k < 0) throw ConfigError("degree must be nonnegative");
  if (symbolic(c, false)) return gram_with(c, cfg, Field<Laurent>(), k);
  return gram_with(c, cfg, Field<Rational>(parse_q(c.q, false)), k);
}

template <Scalar S>
int spectrum_with(const Common& c, const AlgebraConfig& cfg, const Field<S>& f, int k_max) {
  PolAlgebra<S> alg(cfg, f);
  FockSpace<S> fock(alg);
  Json arr = Json::array();
  std::ostringstream csv;
  csv << "degree,eigenvalue\n";
  try {
    for (const auto& [k, v] : y_spectrum(fock, k_max)) {
      arr.push_back({{"degree", k}, {"eigenvalue", v.to_string()}});
      csv << k << "," << csv_field(v.to_string()) << "\n";
    }
  } catch (const SpectrumMismatch& e) {
    Json j{{"m", cfg.m}, {"n", cfg.n}, {"q", f.describe()}, {"error", e.what()}};
    emit(c, c.format == "csv" ? std::string("error,") + csv_field(e.what()) + "\n" : dump(j));
    return kFail;
  }
  Json j{{"m", cfg.m}, {"n", cfg.n}, {"q", f.describe()}, {"spectrum", arr}};
  emit(c, c.format == "csv" ? csv.str() : dump(j));
  return kPass;
}

int cmd_spectrum(const Common& c, int k_max) {
  const auto cfg = config_of(c);
  if (k_max < 0) throw ConfigError("max-degree must be nonnegative");
  if (symbolic(c, false)) return spectrum_with(c, cfg, Field<Laurent>(), k_max);
  return spectrum_with(c, cfg, Field<Rational>(parse_q(c.q, false)), k_max);
}

int cmd_norm(const Common& c) {
  const auto cfg = config_of(c);
  if (symbolic(c, false)) throw ConfigError("norm needs a numeric q");
  const Rational q = parse_q(c.q, true);
  if (q >= Rational(1)) throw ConfigError("norm needs 0 < q < 1");
  const auto res = norm_Z(cfg, c.cutoff, q);
  const bool ok = res.converged && res.norm <= 1.0 + 1e-9;
  auto fmt = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return std::string(buf);
  };
  if (c.format == "csv") {
    std::ostringstream os;
    os << "degree,norm\n";
    for (std::size_t d = 0; d < res.per_degree.size(); ++d) os << d << "," << fmt(res.per_degree[d]) << "\n";
    emit(c, os.str());
  } else {
    Json per = Json::array();
    for (double x : res.per_degree) per.push_back(fmt(x));
    Json j{{"m", cfg.m},          {"n", cfg.n},         {"q", q.to_string()},
           {"cutoff", c.cutoff},  {"norm", fmt(res.norm)}, {"per_degree", per},
           {"tolerance", "1e-10"}, {"iterations", res.iterations}, {"converged", res.converged},
           {"bound", "1 + 1e-9"}, {"verdict", ok ? "pass" : "fail"}};
    emit(c, dump(j));
  }
  return ok ? kPass : kFail;
}

int cmd_verify(const Common& c, const std::string& group) {
  SuiteOptions o;
  o.config = config_of(c);
  o.cutoff = c.cutoff;
  o.symbolic = symbolic(c, false);
  if (!o.symbolic) o.q = parse_q(c.q, false);
  o.threads = threads_from_env();
  const auto reports = run_suite(group, o);
  emit(c, c.format == "csv" ? reports_csv(reports, c.timing) : dump(reports_json(reports, c.timing)));
  for (const auto& r : reports)
    if (!r.passed()) return kFail;
  return kPass;
}

template <Scalar S>
int operator_with(const Common& c, const AlgebraConfig& cfg, const Field<S>& f, const std::string& text) {
  TildeG<S> g(cfg, f, c.cutoff);
  const auto op = evaluate_operator(*parse_expression(text, cfg), g);
  const auto& sp = op.space();
  auto tuple = [&](std::size_t i) {
    std::string s;
    for (std::size_t k = 0; k < sp.index(i).size(); ++k) s += (k ? " " : "") + std::to_string(sp.index(i)[k]);
    return s;
  };
  Json entries = Json::array();
  std::ostringstream csv;
  csv << "source,target,value\n";
  for (std::size_t src = 0; src < sp.size(); ++src) {
    if (!op.is_valid_source(src)) continue;
    for (const auto& [tgt, v] : op.column(src)) {
      entries.push_back({{"source", sp.index(src)}, {"target", sp.index(tgt)}, {"value", v.to_string()}});
      csv << tuple(src) << "," << tuple(tgt) << "," << csv_field(v.to_string()) << "\n";
    }
  }
  Json j{{"m", cfg.m},
         {"n", cfg.n},
         {"q", f.describe()},
         {"cutoff", c.cutoff},
         {"input", text},
         {"valid_degree", op.valid_degree()},
         {"entries", entries}};
  emit(c, c.format == "csv" ? csv.str() : dump(j));
  return kPass;
}

int cmd_operator(const Common& c, const std::string& text) {
  const auto cfg = config_of(c);
  if (symbolic(c, false)) return operator_with(c, cfg, Field<Laurent>(), text);
  return operator_with(c, cfg, Field<Rational>(parse_q(c.q, false)), text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the Fock representation of the quantum matrix ball"};
  app.require_subcommand(1);
  Common c;
  int max_degree = 6, degree = 2, spec_degree = 3;
  std::string expr, group = "all";

  auto* dims = app.add_subcommand("dims", "dimensions of the homogeneous components");
  add_common(dims, c);
  dims->add_option("--max-degree", max_degree)->capture_default_str();

  auto* nf = app.add_subcommand("normal-form", "normal form of an expression");
  add_common(nf, c);
  nf->add_option("expression", expr, "e.g. \"z*[1,1]*z[1,1]\"")->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix of the Fock form on one degree");
  add_common(gram, c);
  gram->add_option("--degree", degree)->capture_default_str();

  auto* spec = app.add_subcommand("spectrum-y", "eigenvalues of y on each degree");
  add_common(spec, c);
  spec->add_option("--max-degree", spec_degree)->capture_default_str();

  auto* norm = app.add_subcommand("norm", "truncated operator norm of T(Z)");
  add_common(norm, c);

  auto* verify = app.add_subcommand("verify", "run a group of checks");
  add_common(verify, c);
  verify->add_option("group", group, "relations | fock | embedding | equivalence | uq | all")
      ->check(CLI::IsMember(suite_groups()))
      ->capture_default_str();

  auto* op = app.add_subcommand("operator", "matrix of an expression in t and z on the truncated space");
  add_common(op, c);
  op->add_option("expression", expr, "e.g. \"t[1,2]*t[2,1]\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (dims->parsed()) return cmd_dims(c, max_degree);
    if (nf->parsed()) return cmd_normal_form(c, nf->count("--q") > 0, expr);
    if (gram->parsed()) return cmd_gram(c, degree);
    if (spec->parsed()) return cmd_spectrum(c, spec_degree);
    if (norm->parsed()) return cmd_norm(c);
    if (verify->parsed()) return cmd_verify(c, group);
    if (op->parsed()) return cmd_operator(c, expr);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
