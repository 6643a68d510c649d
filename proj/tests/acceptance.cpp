// Acceptance runner: one line per criterion, exit status 1 if any selected criterion fails.
// Usage: dhga_acceptance [criterion...]

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dhga/dhga.hpp"

namespace {

using namespace dhga;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) first_failure = what;
    ok = false;
  }
};

std::string spec_name(const IdempotentSpec& s) {
  return std::to_string(s.n) + "/" + std::string(dhga::to_string(s.kind));
}

/// Runs a suite and records failed rows (up to a few names) in the outcome.
std::size_t run_into(Outcome& out, SuiteConfig cfg, std::map<std::string, int>* failures = nullptr) {
  SuiteReport r = run_suite(cfg);
  for (const auto& row : r.rows) {
    if (row.status != CheckStatus::Fail) continue;
    if (failures) {
      std::string key = std::to_string(cfg.n) + (cfg.kind ? "/" + std::string(dhga::to_string(*cfg.kind)) : "") +
                        " " + row.detail.substr(0, row.detail.find(':'));
      ++(*failures)[key];
    }
    out.require(false, cfg.suite + " n=" + std::to_string(cfg.n) + " trial " + std::to_string(row.trial) + ": " +
                           row.detail);
  }
  return r.rows.size();
}

SuiteConfig config(std::string suite, const IdempotentSpec& s, int trials) {
  SuiteConfig c;
  c.suite = std::move(suite);
  c.n = s.n;
  c.kind = s.kind;
  c.trials = trials;
  c.seed = 20240601;
  return c;
}

void criterion1(Outcome& out) {
  int specs = 0;
  for (const auto& s : all_specs()) {
    auto rep = check_idempotent_props(build_idempotent(s));
    for (const auto& c : rep.checks) out.require(c.ok, spec_name(s) + " " + c.name);
    ++specs;
  }
  out.note << specs << " (n, kind) specs, all idempotent properties exact";
}

void criterion2(Outcome& out) {
  std::ostringstream ranks;
  for (const auto& s : all_specs()) {
    auto rep = verify_injectivity(build_idempotent(s));
    out.require(rep.full_rank(), spec_name(s) + " rank " + std::to_string(rep.rank));
    ranks << " " << spec_name(s) << ":" << rep.rank << "/" << rep.columns;
  }
  out.note << "ranks" << ranks.str();
}

void criterion3(Outcome& out) {
  std::size_t rows = 0;
  for (const auto& s : all_specs()) rows += run_into(out, config("sum2", s, 100));
  out.note << rows << " sum2 trials";
}

void criterion4(Outcome& out) {
  std::size_t rows = 0;
  for (int n = 3; n <= 5; ++n) {
    for (Backend b : {Backend::Exact, Backend::Float}) {
      for (const char* suite : {"double-cover", "lift-roundtrip"}) {
        SuiteConfig c;
        c.suite = suite;
        c.n = n;
        c.trials = 100;
        c.seed = 20240601;
        c.backend = b;
        rows += run_into(out, c);
      }
    }
  }
  out.note << rows << " double-cover and lift round-trip samples over n = 3, 4, 5, exact and float";
}

void criterion5(Outcome& out) {
  const Signature sig(3);
  const double r = 1.0 / std::sqrt(2.0);
  FloatMV S(sig);
  S.add_term(Blade::identity(), Complex(r));
  S.add_term(Blade::from_indices({1, 2}), Complex(-r));
  auto s = classify_spin(S);
  out.require(s.certificate == PinClass::Spin, "certificate is not Spin");
  Matrix<double> expected = Matrix<double>::identity(4);
  expected(1, 1) = 0;
  expected(2, 2) = 0;
  expected(1, 2) = 1;
  expected(2, 1) = -1;
  auto P = adjoint_matrix(s);
  const double adj_err = max_abs_difference(P.matrix(), expected);
  out.require(adj_err <= 1e-12, "adjoint differs by " + std::to_string(adj_err));
  auto lifted = lift(LorentzMatrix<double>::make(expected));
  const double lift_err = std::min(max_abs_difference(lifted.value, S), max_abs_difference(lifted.value, FloatMV(-S)));
  out.require(lift_err <= 1e-9, "lift differs by " + std::to_string(lift_err));
  out.require(lifted.value.coeff(Blade::identity()).real() > 0, "lift violates the sign rule");
  out.note << "Spin; adjoint error " << adj_err << "; lift error " << lift_err;
}

void criterion6(Outcome& out) {
  const Signature sig(5);
  ExactMV S = parse_mv("e + e12 + e45 + e1234 + e012345", sig);
  auto dec = decompose_S(S, QPrimeSpec::make(5, SpinorKind::Spinor));
  const ExactMV S0 = parse_mv("e + e12", sig);
  const ExactMV S4 = parse_mv("-e5 + e123 - e01235", sig);
  out.require(dec.S0 == S0, "S0 = " + format_mv(dec.S0));
  const auto* t4 = dec.find({4});
  out.require(t4 && t4->coeff == S4, "S4 = " + (t4 ? format_mv(t4->coeff) : std::string("missing")));
  out.require(dec.terms.size() == 1, "unexpected extra components");
  out.require(dec.reassemble() == S, "reassembly differs");
  out.note << "S0 = " << format_mv(dec.S0) << ", S4 = " << (t4 ? format_mv(t4->coeff) : "missing");
}

void criterion7(Outcome& out) {
  std::size_t rows = 0;
  for (const auto& s : all_specs()) rows += run_into(out, config("spsi-soundness", s, 100));
  out.note << rows << " SPsi trials (odd S on alternate trials for odd n)";
}

void criterion8(Outcome& out) {
  std::size_t rows = 0;
  for (const auto& s : all_specs(6)) rows += run_into(out, config("spinor-invariance", s, 50));
  out.note << rows << " spinor-invariance checks (even and odd S for odd n)";
}

void criterion9(Outcome& out) {
  std::size_t rows = 0;
  std::map<std::string, int> failures;
  for (const auto& s : all_specs()) rows += run_into(out, config("tensor-invariance", s, 50), &failures);
  for (const auto& s : all_specs()) {
    Rng rng = trial_rng(7, 0);
    auto p = random_problem(rng, s);
    auto r = verify_tensor_invariance(p, tensor_violating_transform(s.n));
    out.require(r.status == CheckStatus::NotApplicable, spec_name(s) + " violating boost not marked not applicable");
  }
  out.note << rows << " tensor-invariance checks";
  if (!failures.empty()) {
    out.note << "; failing members:";
    for (const auto& [k, v] : failures) out.note << " [" << k << " x" << v << "]";
  }
}

void criterion10(Outcome& out) {
  std::size_t checks = 0;
  for (const auto& s : all_specs()) {
    Rng rng = trial_rng(99, std::uint64_t(s.n) * 3 + std::uint64_t(s.kind));
    const Signature sig = s.signature();
    const int nvars = s.n + 1;
    std::vector<DHProblem> cases;
    cases.push_back(DHProblem::make(s, random_rational(rng, true), random_potential(rng, s), FieldMV(sig)));
    FieldMV constant(sig);
    for (const Blade& b : s.qprime().even_basis())
      if (uniform_int(rng, 0, 2) == 0) constant.add_term(b, Polynomial::constant(nvars, GaussRational(random_rational(rng, true))));
    constant.add_term(Blade::identity(), Polynomial::constant(nvars, GaussRational(1)));
    cases.push_back(DHProblem::make(s, Rational(0), Potential::zero(sig), constant));
    for (const auto& p : cases) {
      const std::string tag = spec_name(s) + (p.Psi.is_zero() ? " Psi=0" : " constant Psi");
      out.require(dh_lhs(p).is_zero(), tag + ": F != 0");
      auto S = random_spin_element(rng, s.n, Parity::Even);
      out.require(dh_lhs_spinor_transformed(spinor_transform(p, S)).is_zero(), tag + ": spinor F^ != 0");
      if (s.n % 2 == 1) {
        auto odd = random_spin_element(rng, s.n, Parity::Odd);
        out.require(dh_lhs_spinor_transformed(spinor_transform(p, odd)).is_zero(), tag + ": odd spinor F^ != 0");
      }
      for (const auto& [name, P] : tensor_family(s))
        out.require(dh_lhs_tensor_transformed(tensor_transform(p, P)).is_zero(), tag + ": tensor F^ != 0 for " + name);
      checks += 2;
    }
  }
  out.note << checks << " degenerate problems, F and both transformed F^ vanish";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"idempotent properties", criterion1},   {"injectivity of Y -> Y t", criterion2},
      {"two-sum identity", criterion3},       {"double cover and lift", criterion4},
      {"worked rotation example", criterion5}, {"S decomposition example", criterion6},
      {"wave-function transform", criterion7}, {"spinor invariance", criterion8},
      {"tensor invariance", criterion9},       {"degenerate problems", criterion10}};

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int k = 1; k <= int(criteria.size()); ++k) selected.push_back(k);

  int failed = 0;
  for (int k : selected) {
    if (k < 1 || k > int(criteria.size())) {
      std::cerr << "unknown criterion " << k << "\n";
      return 2;
    }
    const auto& [name, fn] = criteria[k - 1];
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << k << " [" << name << "]: " << (out.ok ? "PASS" : "FAIL") << " (" << out.note.str();
    if (!out.ok) std::cout << "; first failure: " << out.first_failure;
    std::cout << "; " << std::fixed << std::setprecision(2) << secs << " s)" << std::defaultfloat << "\n";
    failed += !out.ok;
  }
  return failed == 0 ? 0 : 1;
}
