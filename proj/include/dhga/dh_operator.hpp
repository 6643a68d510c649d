#pragma once

#include <string>
#include <vector>

#include "dhga/error.hpp"
#include "dhga/lorentz.hpp"
#include "dhga/polynomial.hpp"
#include "dhga/spinor_ideal.hpp"

namespace dhga {

/// Dirac-Hestenes data: mass, potential and a Q'^(0)-valued polynomial wave function.
struct DHProblem {
  IdempotentSpec spec;
  Rational m = 0;
  Potential a;
  FieldMV Psi;

  Signature signature() const { return spec.signature(); }

  static DHProblem make(const IdempotentSpec& spec, Rational m, Potential a, FieldMV Psi) {
    DHProblem p{spec, std::move(m), std::move(a), std::move(Psi)};
    p.validate();
    return p;
  }
  void validate() const {
    if (Psi.signature().n() != spec.n) throw Error(ErrorCode::SignatureMismatch, "Psi signature");
    if (int(a.size()) != spec.n + 1) throw Error(ErrorCode::LengthMismatch, "potential needs n+1 entries");
    if (!Psi.in_qprime_even(spec.qprime())) throw Error(ErrorCode::NotInQPrimeEven, "Psi must lie in Q'^(0)");
  }
};

struct IndexSets {
  std::vector<int> first;
  std::vector<int> second;
};

inline IndexSets index_sets(const IdempotentSpec& spec) {
  IndexSets s;
  s.first = spec.qprime().generators;
  const int d = spec.d;
  const int last = spec.kind == SpinorKind::SemiSpinor ? 2 * d - 1 : 2 * d - 3;
  for (int mu = 3; mu <= last; mu += 2) s.second.push_back(mu);
  return s;
}

/// A_mu = d_mu Psi + Psi a_mu I.
inline FieldMV A_term(const DHProblem& p, int mu) {
  if (mu < 0 || mu > p.spec.n) throw Error(ErrorCode::IndexOutOfRange, "A_" + std::to_string(mu));
  return field_pderiv(p.Psi, mu) + field_scalar_mul(p.a[mu], p.Psi) * unit_I(p.signature());
}

namespace detail {

/// A_mu with the derivative d_mu replaced by sum_nu D(nu, mu) d_nu.
inline std::vector<FieldMV> A_terms(const DHProblem& p, const Matrix<Rational>* dmat = nullptr) {
  const Signature sig = p.signature();
  const int n = sig.n();
  std::vector<FieldMV> d;
  for (int nu = 0; nu <= n; ++nu) d.push_back(field_pderiv(p.Psi, nu));
  const ExactMV I = unit_I(sig);
  std::vector<FieldMV> out;
  for (int mu = 0; mu <= n; ++mu) {
    FieldMV deriv(sig);
    if (dmat) {
      for (int nu = 0; nu <= n; ++nu) {
        const Rational& w = (*dmat)(nu, mu);
        if (sgn(w) != 0) deriv += field_scalar_mul(Polynomial::constant(n + 1, GaussRational(w)), d[nu]);
      }
    } else {
      deriv = d[mu];
    }
    out.push_back(deriv + field_scalar_mul(p.a[mu], p.Psi) * I);
  }
  return out;
}

inline FieldMV mass_term(const DHProblem& p) {
  return scale(p.Psi, Polynomial::constant(p.spec.n + 1, GaussRational(p.m))) * unit_I(p.signature());
}

inline FieldMV lhs_from(const DHProblem& p, const std::vector<FieldMV>& A) {
  const Signature sig = p.signature();
  const ExactMV E = unit_E(sig);
  const ExactMV EI = E * unit_I(sig);
  const IndexSets sets = index_sets(p.spec);
  FieldMV out = mass_term(p);
  for (int mu : sets.first) out += ExactMV::generator(sig, mu) * A[mu] * E;
  for (int mu : sets.second) out += A[mu + 1] * (ExactMV::generator(sig, mu) * EI);
  return out;
}

inline FieldMV single_sum_from(const DHProblem& p, const std::vector<FieldMV>& A) {
  const Signature sig = p.signature();
  const ExactMV E = unit_E(sig);
  FieldMV out = mass_term(p);
  for (int mu = 0; mu <= sig.n(); ++mu) out += ExactMV::generator(sig, mu) * A[mu] * E;
  return out;
}

}  // namespace detail

/// F = sum_{first} e^mu A_mu E + sum_{second} A_{mu+1} e^mu E I + m Psi I.
inline FieldMV dh_lhs(const DHProblem& p) { return detail::lhs_from(p, detail::A_terms(p)); }

/// sum_{mu=0}^{n} e^mu A_mu E + m Psi I.
inline FieldMV dh_lhs_single_sum(const DHProblem& p) {
  return detail::single_sum_from(p, detail::A_terms(p));
}

enum class CheckStatus { Pass, Fail, NotApplicable };

constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not applicable";
  }
  return "unknown";
}

/// Outcome of an identity check; residual is lhs - rhs (zero on pass).
struct IdentityReport {
  CheckStatus status = CheckStatus::Pass;
  FieldMV residual;
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
};

namespace detail {

inline IdentityReport compare(const FieldMV& lhs, const FieldMV& rhs, std::string what) {
  IdentityReport r;
  r.residual = lhs - rhs;
  r.status = r.residual.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = std::move(what);
  return r;
}

}  // namespace detail

/// (dh_lhs - dh_lhs_single_sum) t = 0.
inline IdentityReport check_sum2(const DHProblem& p) {
  const auto A = detail::A_terms(p);
  const ExactMV t = build_idempotent(p.spec).value;
  return detail::compare(detail::lhs_from(p, A) * t, detail::single_sum_from(p, A) * t,
                         "(F - single sum) t = 0");
}

// ---- tensor approach ----

/// Hatted generators e^mu^ = sum_nu P(mu, nu) e^nu, Q = P^{-1}, t^ from the hatted generators,
/// I and E held at -e12 and e0.
struct TensorContext {
  DHProblem problem;
  LorentzMatrix<Rational> P;
  LorentzMatrix<Rational> Q;
  std::vector<ExactMV> hat;
  ExactMV t_hat;
};

inline TensorContext tensor_transform(const DHProblem& p, const LorentzMatrix<Rational>& P) {
  const int n = p.spec.n;
  if (P.n() != n) throw Error(ErrorCode::SignatureMismatch, "P size");
  if (n % 2 == 0 && !P.special()) throw Error(ErrorCode::NotSpecial, "even n requires det P = 1");
  const Signature sig(n);
  std::vector<ExactMV> hat;
  for (int mu = 0; mu <= n; ++mu) {
    ExactMV g(sig);
    for (int nu = 0; nu <= n; ++nu) g.add_term(Blade::generator(nu), GaussRational(P(mu, nu)));
    hat.push_back(std::move(g));
  }
  ExactMV t_hat = idempotent_from_frame(hat, p.spec.dprime);
  return TensorContext{p, P, P.inverse(), std::move(hat), std::move(t_hat)};
}

/// -e^{2mu-1} e^{2mu} t^ = i t^ for mu = 1..d' (unhatted bivectors, hatted idempotent).
inline bool check_tensor_condition(const TensorContext& ctx) {
  const Signature sig = ctx.t_hat.signature();
  const ExactMV it = scale(ctx.t_hat, GaussRational(Rational(0), Rational(1)));
  for (int mu = 1; mu <= ctx.problem.spec.dprime; ++mu) {
    ExactMV biv = make_blade(sig, {2 * mu - 1, 2 * mu}, GaussRational(-1));
    if (!(biv * ctx.t_hat == it)) return false;
  }
  return true;
}

/// F^ = sum_{first} e^mu^ A^_mu E + sum_{second} A^_{mu+1} I e^mu^ E + m Psi I with
/// A^_mu = sum_alpha Q(alpha, mu) A_alpha, over the original coordinates.
inline FieldMV dh_lhs_tensor_transformed(const TensorContext& ctx) {
  const DHProblem& p = ctx.problem;
  const Signature sig = p.signature();
  const int n = sig.n();
  const auto A = detail::A_terms(p);
  std::vector<FieldMV> A_hat;
  for (int mu = 0; mu <= n; ++mu) {
    FieldMV s(sig);
    for (int alpha = 0; alpha <= n; ++alpha) {
      const Rational& w = ctx.Q(alpha, mu);
      if (sgn(w) != 0) s += field_scalar_mul(Polynomial::constant(n + 1, GaussRational(w)), A[alpha]);
    }
    A_hat.push_back(std::move(s));
  }
  const ExactMV E = unit_E(sig);
  const ExactMV I = unit_I(sig);
  const IndexSets sets = index_sets(p.spec);
  FieldMV out = detail::mass_term(p);
  for (int mu : sets.first) out += ctx.hat[mu] * A_hat[mu] * E;
  for (int mu : sets.second) out += A_hat[mu + 1] * (I * ctx.hat[mu] * E);
  return out;
}

/// F^ t^ = (sum_{mu=0}^{n} e^mu A_mu E + m Psi I) t^ when the condition on t^ holds.
inline IdentityReport verify_tensor_invariance(const DHProblem& p, const LorentzMatrix<Rational>& P) {
  TensorContext ctx = tensor_transform(p, P);
  if (!check_tensor_condition(ctx)) {
    IdentityReport r;
    r.status = CheckStatus::NotApplicable;
    r.residual = FieldMV(p.signature());
    r.detail = "condition not satisfied; theorem not applicable";
    return r;
  }
  return detail::compare(dh_lhs_tensor_transformed(ctx) * ctx.t_hat, dh_lhs_single_sum(p) * ctx.t_hat,
                         "F^ t^ = (single sum) t^");
}

// ---- spinor approach ----

/// Transformed problem over the original coordinates: Psi^ from the wave-function transform,
/// a^_mu = sum_nu Q(nu, mu) a_nu, and derivatives d^_mu = sum_nu Q(nu, mu) d_nu.
struct SpinorTransformed {
  DHProblem problem;
  LorentzMatrix<Rational> P;
  LorentzMatrix<Rational> Q;
};

inline SpinorTransformed spinor_transform(const DHProblem& p, const SpinElement<GaussRational>& s) {
  const int n = p.spec.n;
  if (s.value.signature().n() != n) throw Error(ErrorCode::SignatureMismatch, "S signature");
  if (n % 2 == 0 && s.parity == Parity::Odd)
    throw Error(ErrorCode::OddSpinElementInEvenDimension, "even n admits only even S");
  SpinElement<GaussRational> certified;
  try {
    certified = classify_spin(s.value);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotCertified, e.what());
  }
  LorentzMatrix<Rational> P = adjoint_matrix(certified);
  LorentzMatrix<Rational> Q = P.inverse();
  Potential a_hat = Potential::zero(p.signature());
  for (int mu = 0; mu <= n; ++mu)
    for (int nu = 0; nu <= n; ++nu)
      if (sgn(Q(nu, mu)) != 0) a_hat.a[mu] += p.a[nu] * GaussRational(Q(nu, mu));
  DHProblem hat{p.spec, p.m, std::move(a_hat), transform_wavefunction(certified, p.Psi, p.spec.qprime())};
  return SpinorTransformed{std::move(hat), std::move(P), std::move(Q)};
}

/// Left-hand side of the transformed equation (hatted derivatives, Psi^, a^).
inline FieldMV dh_lhs_spinor_transformed(const SpinorTransformed& st) {
  const Matrix<Rational>& q = st.Q.matrix();
  return detail::lhs_from(st.problem, detail::A_terms(st.problem, &q));
}

/// F^ t = S F t.
inline IdentityReport verify_spinor_invariance(const DHProblem& p, const SpinElement<GaussRational>& s) {
  const SpinorTransformed st = spinor_transform(p, s);
  const ExactMV t = build_idempotent(p.spec).value;
  return detail::compare(dh_lhs_spinor_transformed(st) * t, s.value * dh_lhs(p) * t, "F^ t = S F t");
}

}  // namespace dhga
