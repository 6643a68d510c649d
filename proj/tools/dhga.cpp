// dhga: command-line front end for the Dirac-Hestenes geometric-algebra checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dhga/dhga.hpp"

namespace {

using namespace dhga;

enum ExitCode { kPass = 0, kFail = 1, kConfig = 2 };

struct Options {
  int n = 3;
  std::string kind;
  int trials = 25;
  std::uint64_t seed = 1;
  std::string backend = "exact";
  std::string format = "text";
  std::string out;
  std::string suite;
  std::string expr;
  std::string matrix_file;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int dimension_cap() {
  const char* env = std::getenv("DHGA_MAX_N");
  if (!env) return kMaxN;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) throw ConfigError("DHGA_MAX_N must be a positive integer");
  return int(std::min<long>(v, kMaxN));
}

Backend parse_backend(const std::string& s) { return s == "float" ? Backend::Float : Backend::Exact; }

Signature signature_for(const Options& o) {
  if (o.n > dimension_cap())
    throw ConfigError("n=" + std::to_string(o.n) + " exceeds dimension cap " + std::to_string(dimension_cap()));
  return Signature(o.n);
}

void emit(const Options& o, const std::string& text, const json& j) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot write " + o.out);
    f << j.dump(2) << "\n";
  }
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.suite = o.suite;
  cfg.n = o.n;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.backend = parse_backend(o.backend);
  try {
    if (!o.kind.empty()) cfg.kind = parse_spinor_kind(o.kind);
    validate_config(cfg, dimension_cap());
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  std::ostringstream text;
  auto stream = [&](const TrialResult& r) {
    if (o.format == "text") {
      std::cout << "trial " << r.trial << ": " << dhga::to_string(r.status);
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
    }
  };
  SuiteReport report = run_suite(cfg, stream, dimension_cap());
  text << cfg.suite << " n=" << cfg.n;
  if (cfg.kind) text << " kind=" << dhga::to_string(*cfg.kind);
  text << " trials=" << cfg.trials << " seed=" << cfg.seed << ": " << (report.passed() ? "pass" : "fail")
       << " (passed " << report.count(CheckStatus::Pass) << ", failed " << report.count(CheckStatus::Fail)
       << ", not applicable " << report.count(CheckStatus::NotApplicable) << ")\n";
  emit(o, text.str(), report.to_json());
  return report.passed() ? kPass : kFail;
}

int cmd_idempotent(const Options& o) {
  signature_for(o);
  if (o.kind.empty()) throw ConfigError("idempotent needs --kind");
  IdempotentSpec spec;
  try {
    spec = IdempotentSpec::make(o.n, parse_spinor_kind(o.kind));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  Idempotent t = build_idempotent(spec);
  IdempotentReport rep = check_idempotent_props(t);
  json props = json::array();
  std::ostringstream text;
  text << "t = " << format_mv(t.value) << "\n" << "terms: " << t.value.terms().size() << "\n";
  for (const auto& c : rep.checks) {
    props.push_back({{"property", c.name}, {"status", c.ok ? "pass" : "fail"}});
    text << c.name << ": " << (c.ok ? "pass" : "fail") << "\n";
  }
  json j{{"check", "idempotent"},
         {"spec", {{"n", spec.n}, {"kind", dhga::to_string(spec.kind)}, {"d", spec.d}, {"dprime", spec.dprime}}},
         {"status", rep.ok() ? "pass" : "fail"},
         {"terms", t.value.terms().size()},
         {"value", mv_to_json(t.value)},
         {"properties", std::move(props)},
         {"witness", rep.ok() ? json(nullptr) : mv_to_json(t.value)}};
  emit(o, text.str(), j);
  return rep.ok() ? kPass : kFail;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

template <class R>
int report_lift(const Options& o, const LorentzMatrix<R>& P) {
  auto S = lift(P);
  std::ostringstream text;
  text << "S = " << format_mv(S.value) << "\n";
  text << "certificate: " << dhga::to_string(S.certificate) << "\n";
  if constexpr (std::is_same_v<R, Rational>)
    text << "S ~S = " << S.norm.re << "\n";
  else
    text << "S ~S = " << S.norm.real() << "\n";
  json j{{"check", "lift"},
         {"status", "pass"},
         {"value", mv_to_json(S.value)},
         {"certificate", dhga::to_string(S.certificate)},
         {"unit", S.is_unit()}};
  if constexpr (std::is_same_v<R, Rational>)
    j["norm"] = rational_json(S.norm.re);
  else
    j["norm"] = S.norm.real();
  emit(o, text.str(), j);
  return kPass;
}

int cmd_lift(const Options& o) {
  json mj = read_json_file(o.matrix_file);
  try {
    if (parse_backend(o.backend) == Backend::Float || matrix_json_is_float(mj))
      return report_lift(o, LorentzMatrix<double>::make(matrix_from_json_float(mj)));
    return report_lift(o, LorentzMatrix<Rational>::make(matrix_from_json_exact(mj)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::LengthMismatch) throw ConfigError(e.what());
    throw;
  }
}

ExactMV parse_expr(const Options& o) {
  Signature sig = signature_for(o);
  try {
    return parse_mv(o.expr, sig);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

template <class C>
json matrix_json(const LorentzMatrix<C>& p) {
  return matrix_to_json(p.matrix());
}

template <class C>
std::string matrix_text(const Matrix<C>& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "\n";
  }
  return os.str();
}

int cmd_classify(const Options& o, bool with_adjoint) {
  ExactMV u = parse_expr(o);
  auto report = [&](const auto& s) {
    std::ostringstream text;
    text << "certificate: " << dhga::to_string(s.certificate) << "\n";
    json j{{"check", with_adjoint ? "adjoint" : "classify"},
           {"status", "pass"},
           {"certificate", dhga::to_string(s.certificate)},
           {"parity", s.parity == Parity::Even ? "even" : "odd"}};
    if (with_adjoint) {
      auto P = adjoint_matrix(s);
      text << matrix_text(P.matrix());
      j["matrix"] = matrix_json(P);
    }
    emit(o, text.str(), j);
  };
  try {
    if (parse_backend(o.backend) == Backend::Float)
      report(classify_spin(to_float(u)));
    else
      report(classify_spin(u));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInPin) throw;
    json j{{"check", with_adjoint ? "adjoint" : "classify"},
           {"status", "fail"},
           {"reason", e.what()},
           {"witness", mv_to_json(u)}};
    emit(o, std::string(e.what()) + "\n", j);
    return kFail;
  }
  return kPass;
}

int cmd_eval(const Options& o) {
  ExactMV u = parse_expr(o);
  emit(o, format_mv(u) + "\n", mv_to_json(u));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometric-algebra checks for the multidimensional Dirac-Hestenes equation"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Spatial dimension n of Cl(1,n)")->check(CLI::Range(1, kMaxN));
    sub->add_option("--backend", o.backend, "exact | float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--format,--print", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Also write the JSON report to FILE");
  };

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", o.suite, "Suite name")->required();
  verify->add_option("--kind", o.kind, "spinor | semispinor | doublespinor");
  verify->add_option("--trials", o.trials, "Number of random trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Random seed");
  common(verify);

  auto* idem = app.add_subcommand("idempotent", "Print the Hermitian idempotent and its properties");
  idem->add_option("--kind", o.kind, "spinor | semispinor | doublespinor")->required();
  common(idem);

  auto* lift_cmd = app.add_subcommand("lift", "Lift a Lorentz matrix (JSON file) to a spin element");
  lift_cmd->add_option("matrix", o.matrix_file, "Matrix JSON file")->required();
  common(lift_cmd);

  auto* adjoint = app.add_subcommand("adjoint", "Adjoint matrix of a spin element");
  adjoint->add_option("expr", o.expr, "Multivector expression")->required();
  common(adjoint);

  auto* eval = app.add_subcommand("eval", "Parse and print a multivector in canonical form");
  eval->add_option("expr", o.expr, "Multivector expression")->required();
  common(eval);

  auto* classify = app.add_subcommand("classify", "Certify Pin/Spin membership");
  classify->add_option("expr", o.expr, "Multivector expression")->required();
  common(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*idem) return cmd_idempotent(o);
    if (*lift_cmd) return cmd_lift(o);
    if (*adjoint) return cmd_classify(o, true);
    if (*eval) return cmd_eval(o);
    if (*classify) return cmd_classify(o, false);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kConfig;
}
