#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dhga/dh_operator.hpp"
#include "dhga/io.hpp"
#include "dhga/lorentz.hpp"
#include "dhga/random.hpp"
#include "dhga/spinor_ideal.hpp"

namespace dhga {

enum class Backend { Exact, Float };

struct SuiteConfig {
  std::string suite;
  int n = 3;
  std::optional<SpinorKind> kind;
  int trials = 25;
  std::uint64_t seed = 1;
  Backend backend = Backend::Exact;
};

/// One trial outcome; witness is JSON (multivector, field or matrix) or null.
struct TrialResult {
  int trial = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  json witness;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<TrialResult> rows;

  std::size_t count(CheckStatus s) const {
    std::size_t c = 0;
    for (const auto& r : rows) c += r.status == s;
    return c;
  }
  bool passed() const { return count(CheckStatus::Fail) == 0; }
  json to_json() const;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "sum2",          "spinor-invariance", "tensor-invariance", "idempotent-props", "injectivity",
      "double-cover",  "lift-roundtrip",    "decS-roundtrip",    "spsi-soundness"};
  return names;
}

inline bool suite_needs_kind(const std::string& suite) {
  return suite != "double-cover" && suite != "lift-roundtrip";
}

inline json field_to_json(const FieldMV& u) {
  json terms = json::array();
  for (const auto& [b, c] : u.terms()) terms.push_back({{"blade", b.indices()}, {"poly", c.to_string()}});
  return json{{"sig", u.signature().n()}, {"terms", std::move(terms)}};
}

inline json SuiteReport::to_json() const {
  json witnesses = json::array();
  for (const auto& r : rows) {
    if (r.status != CheckStatus::Fail) continue;
    witnesses.push_back({{"trial", r.trial}, {"detail", r.detail}, {"witness", r.witness}});
  }
  json out{{"suite", config.suite},
           {"n", config.n},
           {"kind", config.kind ? json(std::string(dhga::to_string(*config.kind))) : json(nullptr)},
           {"trials", config.trials},
           {"seed", config.seed},
           {"backend", config.backend == Backend::Exact ? "exact" : "float"},
           {"status", passed() ? "pass" : "fail"},
           {"passed", count(CheckStatus::Pass)},
           {"failed", count(CheckStatus::Fail)},
           {"not_applicable", count(CheckStatus::NotApplicable)},
           {"witnesses", std::move(witnesses)}};
  return out;
}

/// Condition-satisfying transformations for the tensor suite: identity, the quarter-turn in
/// the (1,2) plane, Pythagorean rotations in each pinned plane (2mu-1, 2mu), boosts in planes
/// (0, j) with j outside every pinned plane, and rotation-boost products.
inline std::vector<std::pair<std::string, LorentzMatrix<Rational>>> tensor_family(const IdempotentSpec& spec) {
  const int n = spec.n;
  std::vector<std::pair<std::string, Matrix<Rational>>> raw;
  raw.push_back({"identity", Matrix<Rational>::identity(n + 1)});
  Matrix<Rational> quarter = Matrix<Rational>::identity(n + 1);
  quarter(1, 1) = 0;
  quarter(2, 2) = 0;
  quarter(1, 2) = 1;
  quarter(2, 1) = -1;
  raw.push_back({"quarter-turn(1,2)", quarter});
  std::vector<int> free_axes;
  for (int j = 2 * spec.dprime + 1; j <= n; ++j) free_axes.push_back(j);
  const auto& rots = rational_rotations();
  const auto& boosts = rational_boosts();
  for (int mu = 1; mu <= spec.dprime; ++mu) {
    const auto& [c, s] = rots[(mu - 1) % rots.size()];
    auto r = plane_rotation(n, 2 * mu - 1, 2 * mu, c, s);
    raw.push_back({"rotation(" + std::to_string(2 * mu - 1) + "," + std::to_string(2 * mu) + ")", r});
  }
  for (std::size_t k = 0; k < free_axes.size(); ++k) {
    const auto& [ch, sh] = boosts[k % boosts.size()];
    auto b = plane_boost(n, free_axes[k], ch, sh);
    raw.push_back({"boost(0," + std::to_string(free_axes[k]) + ")", b});
    raw.push_back({"rotation(1,2)*boost(0," + std::to_string(free_axes[k]) + ")",
                   plane_rotation(n, 1, 2, rots[0].first, rots[0].second) * b});
  }
  std::vector<std::pair<std::string, LorentzMatrix<Rational>>> out;
  for (auto& [name, m] : raw) out.push_back({name, LorentzMatrix<Rational>::make(std::move(m))});
  return out;
}

/// Boost mixing e0 with e1; breaks the pinned-bivector condition.
inline LorentzMatrix<Rational> tensor_violating_transform(int n) {
  return LorentzMatrix<Rational>::make(plane_boost(n, 1, Rational(5, 3), Rational(4, 3)));
}

namespace detail {

inline TrialResult from_identity(int trial, const IdentityReport& r) {
  TrialResult out{trial, r.status, r.detail, nullptr};
  if (r.status == CheckStatus::Fail) out.witness = field_to_json(r.residual);
  return out;
}

inline TrialResult pass(int trial, std::string detail = {}) {
  return TrialResult{trial, CheckStatus::Pass, std::move(detail), nullptr};
}
inline TrialResult fail(int trial, std::string detail, json witness = nullptr) {
  return TrialResult{trial, CheckStatus::Fail, std::move(detail), std::move(witness)};
}

inline std::vector<TrialResult> run_trial(const SuiteConfig& cfg, const std::optional<IdempotentSpec>& spec,
                                          int trial) {
  Rng rng = trial_rng(cfg.seed, std::uint64_t(trial));
  const std::string& s = cfg.suite;
  const int n = cfg.n;
  std::vector<TrialResult> out;

  if (s == "sum2") {
    out.push_back(from_identity(trial, check_sum2(random_problem(rng, *spec))));
  } else if (s == "spinor-invariance") {
    DHProblem p = random_problem(rng, *spec);
    auto even = random_spin_element(rng, n, Parity::Even);
    auto r = from_identity(trial, verify_spinor_invariance(p, even));
    r.detail = "even S: " + r.detail;
    out.push_back(std::move(r));
    if (n % 2 == 1) {
      auto odd = random_spin_element(rng, n, Parity::Odd);
      auto ro = from_identity(trial, verify_spinor_invariance(p, odd));
      ro.detail = "odd S: " + ro.detail;
      out.push_back(std::move(ro));
    }
  } else if (s == "tensor-invariance") {
    const auto family = tensor_family(*spec);
    const auto& [name, P] = family[std::size_t(trial) % family.size()];
    DHProblem p = random_problem(rng, *spec);
    auto r = from_identity(trial, verify_tensor_invariance(p, P));
    r.detail = name + ": " + r.detail;
    if (r.status == CheckStatus::NotApplicable) {
      r.status = CheckStatus::Fail;
      r.detail = name + ": family member violates the pinned-bivector condition";
    }
    out.push_back(std::move(r));
    if (trial == 0) {
      auto v = from_identity(trial, verify_tensor_invariance(p, tensor_violating_transform(n)));
      v.detail = "boost(0,1): " + v.detail;
      out.push_back(std::move(v));
    }
  } else if (s == "idempotent-props") {
    auto t = build_idempotent(*spec);
    auto rep = check_idempotent_props(t);
    for (const auto& c : rep.checks)
      if (!c.ok) out.push_back(fail(trial, c.name, mv_to_json(t.value)));
    ExactMV U = random_mv(rng, spec->signature(), 6, true);
    ExactMV Ut = U * t.value;
    if (!(Ut * t.value == Ut)) out.push_back(fail(trial, "(U t) t != U t", mv_to_json(U)));
    if (out.empty()) out.push_back(pass(trial));
  } else if (s == "injectivity") {
    auto t = build_idempotent(*spec);
    if (trial == 0) {
      auto rep = verify_injectivity(t);
      if (!rep.full_rank())
        out.push_back(fail(trial, "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.columns)));
    }
    const auto basis = spec->qprime().even_basis();
    ExactMV Psi(spec->signature());
    for (int k = uniform_int(rng, 1, 6); k > 0; --k)
      Psi.add_term(basis[uniform_int(rng, 0, int(basis.size()) - 1)], GaussRational(random_rational(rng)));
    ExactMV back = Psi_from_psi(psi_from_Psi(Psi, t), t);
    if (!(back == Psi)) out.push_back(fail(trial, "Psi_from_psi(psi_from_Psi(Psi)) != Psi", mv_to_json(Psi)));
    if (out.empty()) out.push_back(pass(trial));
  } else if (s == "double-cover") {
    const Parity parity = n % 2 == 1 && uniform_int(rng, 0, 1) ? Parity::Odd : Parity::Even;
    auto s1 = random_spin_element(rng, n, parity);
    auto s2 = random_spin_element(rng, n, Parity::Even);
    if (cfg.backend == Backend::Exact) {
      auto p1 = adjoint_matrix(s1);
      auto p2 = adjoint_matrix(s2);
      SpinElement<GaussRational> prod = classify_spin(s1.value * s2.value);
      SpinElement<GaussRational> neg = classify_spin(-s1.value);
      if (!is_orthogonal(p1.matrix())) out.push_back(fail(trial, "adjoint not in O(1,n)", mv_to_json(s1.value)));
      if (!(adjoint_matrix(prod) == p1 * p2)) out.push_back(fail(trial, "ad(S1 S2) != ad(S1) ad(S2)", mv_to_json(s1.value)));
      if (!(adjoint_matrix(neg) == p1)) out.push_back(fail(trial, "ad(-S) != ad(S)", mv_to_json(s1.value)));
      if (!kernel_check(s1) || !kernel_check(prod)) out.push_back(fail(trial, "non-scalar kernel element", mv_to_json(s1.value)));
      if (s1.parity == Parity::Even && !p1.special()) out.push_back(fail(trial, "even S with det P != 1", mv_to_json(s1.value)));
    } else {
      auto f1 = to_float_unit(s1);
      auto f2 = to_float_unit(s2);
      auto p1 = adjoint_matrix(f1);
      auto prod = classify_spin(f1.value * f2.value);
      if (!is_orthogonal(p1.matrix())) out.push_back(fail(trial, "adjoint not in O(1,n) within 1e-10", mv_to_json(f1.value)));
      if (!(adjoint_matrix(prod) == p1 * adjoint_matrix(f2))) out.push_back(fail(trial, "homomorphism beyond 1e-10", mv_to_json(f1.value)));
      if (!(adjoint_matrix(classify_spin(-f1.value)) == p1)) out.push_back(fail(trial, "ad(-S) != ad(S)", mv_to_json(f1.value)));
    }
    if (out.empty()) out.push_back(pass(trial));
  } else if (s == "lift-roundtrip") {
    std::optional<int> det;
    if (n % 2 == 0) det = 1;
    auto P = random_lorentz(rng, n, det);
    if (cfg.backend == Backend::Exact) {
      auto S = lift(P);
      if (!(adjoint_matrix(S) == P)) out.push_back(fail(trial, "ad(lift(P)) != P", matrix_to_json(P.matrix())));
    } else {
      auto Pf = LorentzMatrix<double>::make(to_double(P.matrix()));
      auto S = lift(Pf);
      if (max_abs_difference(adjoint_matrix(S).matrix(), Pf.matrix()) > 1e-9)
        out.push_back(fail(trial, "ad(lift(P)) != P beyond 1e-9", matrix_to_json(P.matrix())));
    }
    if (out.empty()) out.push_back(pass(trial));
  } else if (s == "decS-roundtrip") {
    const auto q = spec->qprime();
    const Parity parity = n % 2 == 1 && uniform_int(rng, 0, 1) ? Parity::Odd : Parity::Even;
    ExactMV S = uniform_int(rng, 0, 1) ? random_spin_element(rng, n, parity).value
                                       : (parity == Parity::Even ? random_mv(rng, Signature(n), 8).even_part()
                                                                 : random_mv(rng, Signature(n), 8).odd_part());
    if (S.is_zero()) S = ExactMV::one(Signature(n));
    auto dec = decompose_S(S, q);
    if (!(dec.reassemble() == S)) out.push_back(fail(trial, "reassembly differs", mv_to_json(S)));
    const bool s_odd = S.is_odd() && !S.is_even();
    for (const auto& term : dec.terms) {
      const bool want_odd = s_odd != (term.indices.size() % 2 == 1);
      const bool ok = want_odd ? term.coeff.is_odd() : term.coeff.is_even();
      if (!ok || !term.coeff.in_qprime(q)) out.push_back(fail(trial, "component parity/membership", mv_to_json(S)));
    }
    if (out.empty()) out.push_back(pass(trial));
  } else if (s == "spsi-soundness") {
    const auto q = spec->qprime();
    const auto t = build_idempotent(*spec).value;
    const Parity parity = n % 2 == 1 && trial % 2 == 1 ? Parity::Odd : Parity::Even;
    auto S = random_spin_element(rng, n, parity);
    FieldMV Psi = random_Psi(rng, *spec);
    FieldMV hat = transform_wavefunction(S, Psi, q);
    if (!(hat * t == S.value * Psi * t))
      out.push_back(fail(trial, "Psi^ t != S Psi t", field_to_json(hat * t - S.value * Psi * t)));
    if (!hat.in_qprime_even(q)) out.push_back(fail(trial, "Psi^ outside Q'^(0)", field_to_json(hat)));
    if (out.empty()) out.push_back(pass(trial, parity == Parity::Odd ? "odd S" : "even S"));
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown suite '" + s + "'");
  }
  return out;
}

}  // namespace detail

/// Validates a configuration; throws InvalidSpec / DimensionTooLarge on misuse.
inline void validate_config(const SuiteConfig& cfg, int max_n = kMaxN) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw Error(ErrorCode::InvalidSpec, "unknown suite '" + cfg.suite + "'");
  if (cfg.n > max_n) throw Error(ErrorCode::DimensionTooLarge, "n=" + std::to_string(cfg.n) + " exceeds cap " + std::to_string(max_n));
  if (cfg.n < 1) throw Error(ErrorCode::InvalidSpec, "n must be positive");
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidSpec, "trials must be >= 1");
  if (suite_needs_kind(cfg.suite)) {
    if (!cfg.kind) throw Error(ErrorCode::InvalidSpec, "suite '" + cfg.suite + "' needs --kind");
    spinor_half_dimension(cfg.n, *cfg.kind);
  }
  if (cfg.backend == Backend::Float && suite_needs_kind(cfg.suite))
    throw Error(ErrorCode::InvalidSpec, "suite '" + cfg.suite + "' runs on the exact backend only");
}

/// Runs a suite trial by trial; on_row (if set) sees every row as it is produced.
inline SuiteReport run_suite(const SuiteConfig& cfg, const std::function<void(const TrialResult&)>& on_row = {},
                             int max_n = kMaxN) {
  validate_config(cfg, max_n);
  std::optional<IdempotentSpec> spec;
  if (suite_needs_kind(cfg.suite)) spec = IdempotentSpec::make(cfg.n, *cfg.kind);
  SuiteReport report{cfg, {}};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::vector<TrialResult> rows;
    try {
      rows = detail::run_trial(cfg, spec, trial);
    } catch (const Error& e) {
      rows = {detail::fail(trial, e.what())};
    }
    for (auto& r : rows) {
      if (on_row) on_row(r);
      report.rows.push_back(std::move(r));
    }
  }
  return report;
}

}  // namespace dhga
