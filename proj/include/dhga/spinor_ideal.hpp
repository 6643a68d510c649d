#pragma once

#include <string>
#include <vector>

#include "dhga/error.hpp"
#include "dhga/linalg.hpp"
#include "dhga/lorentz.hpp"
#include "dhga/multivector.hpp"
#include "dhga/polynomial.hpp"
#include "dhga/qprime.hpp"

namespace dhga {

/// I = -e12.
inline ExactMV unit_I(Signature sig) { return make_blade(sig, {1, 2}, GaussRational(-1)); }
/// E = e0.
inline ExactMV unit_E(Signature sig) { return ExactMV::generator(sig, 0); }

/// (n, kind) together with d and the product bound d'.
struct IdempotentSpec {
  int n = 3;
  SpinorKind kind = SpinorKind::Spinor;
  int d = 2;
  int dprime = 1;

  static IdempotentSpec make(int n, SpinorKind kind) {
    IdempotentSpec s;
    s.n = n;
    s.kind = kind;
    s.d = spinor_half_dimension(n, kind);
    s.dprime = kind == SpinorKind::SemiSpinor ? s.d : s.d - 1;
    return s;
  }
  Signature signature() const { return Signature(n); }
  QPrimeSpec qprime() const { return QPrimeSpec::make(n, kind); }
};

/// All (n, kind) combinations with n <= max_n.
inline std::vector<IdempotentSpec> all_specs(int max_n = kMaxN) {
  std::vector<IdempotentSpec> out;
  for (int n = 3; n <= max_n; ++n) {
    if (n % 2 == 1) {
      out.push_back(IdempotentSpec::make(n, SpinorKind::Spinor));
    } else {
      out.push_back(IdempotentSpec::make(n, SpinorKind::SemiSpinor));
      out.push_back(IdempotentSpec::make(n, SpinorKind::DoubleSpinor));
    }
  }
  return out;
}

struct Idempotent {
  IdempotentSpec spec;
  ExactMV value;
};

/// 1/2 (e + g0) prod_{mu=1}^{d'} 1/2 (e + i g_{2mu-1} g_{2mu}) for an arbitrary generator frame
/// g (the original generators, or hatted ones in the tensor approach).
inline ExactMV idempotent_from_frame(const std::vector<ExactMV>& g, int dprime) {
  const Signature sig = g.at(0).signature();
  const ExactMV e = ExactMV::one(sig);
  const GaussRational half(Rational(1, 2));
  const GaussRational ihalf(Rational(0), Rational(1, 2));
  ExactMV t = scale(e + g[0], half);
  for (int mu = 1; mu <= dprime; ++mu)
    t = t * (scale(e, half) + scale(g.at(2 * mu - 1) * g.at(2 * mu), ihalf));
  return t;
}

inline std::vector<ExactMV> standard_frame(Signature sig) {
  std::vector<ExactMV> g;
  for (int mu = 0; mu <= sig.n(); ++mu) g.push_back(ExactMV::generator(sig, mu));
  return g;
}

inline Idempotent build_idempotent(const IdempotentSpec& spec) {
  return Idempotent{spec, idempotent_from_frame(standard_frame(spec.signature()), spec.dprime)};
}

struct PropertyCheck {
  std::string name;
  bool ok = false;
};

struct IdempotentReport {
  std::vector<PropertyCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  /// Throws PropertyFailed naming the first failing equation.
  void require() const {
    for (const auto& c : checks)
      if (!c.ok) throw Error(ErrorCode::PropertyFailed, c.name);
  }
};

inline IdempotentReport check_idempotent_props(const Idempotent& idem) {
  const ExactMV& t = idem.value;
  const Signature sig = t.signature();
  const GaussRational i(Rational(0), Rational(1));
  IdempotentReport r;
  r.checks.push_back({"t^2 = t", t * t == t});
  r.checks.push_back({"t^dagger = t", t.hermitian_conjugate() == t});
  r.checks.push_back({"I t = i t", unit_I(sig) * t == scale(t, i)});
  r.checks.push_back({"E t = t", unit_E(sig) * t == t});
  for (int mu = 1; mu <= idem.spec.dprime; ++mu) {
    ExactMV lhs = scale(ExactMV::generator(sig, 2 * mu - 1), i) * t;
    ExactMV rhs = ExactMV::generator(sig, 2 * mu) * t;
    r.checks.push_back({"i e" + std::to_string(2 * mu - 1) + " t = e" + std::to_string(2 * mu) + " t", lhs == rhs});
  }
  return r;
}

/// psi = Psi t.
template <class C>
Multivector<C> psi_from_Psi(const Multivector<C>& Psi, const Idempotent& t) {
  if (!Psi.in_qprime_even(t.spec.qprime()))
    throw Error(ErrorCode::NotInQPrimeEven, "Psi must lie in Q'^(0)");
  return Psi * t.value;
}

namespace detail {

/// Real matrix of Y -> Y t on the (real) Q'^(0) basis: one row per (blade, re/im) pair.
inline Matrix<Rational> right_multiplication_system(const ExactMV& t, const std::vector<Blade>& basis) {
  const Signature sig = t.signature();
  const std::size_t dim = sig.dimension();
  Matrix<Rational> a(2 * dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    ExactMV img = ExactMV::basis(sig, basis[j]) * t;
    for (const auto& [b, c] : img.terms()) {
      a(2 * b.mask, j) = c.re;
      a(2 * b.mask + 1, j) = c.im;
    }
  }
  return a;
}

}  // namespace detail

/// The unique Psi in Q'^(0) with Psi t = psi, by an exact solve over the Q'^(0) blade basis.
inline ExactMV Psi_from_psi(const ExactMV& psi, const Idempotent& t) {
  if (!(psi * t.value == psi)) throw Error(ErrorCode::NotInIdeal, "psi t != psi");
  const QPrimeSpec q = t.spec.qprime();
  const auto basis = q.even_basis();
  const Signature sig = t.value.signature();
  std::vector<Rational> rhs(2 * sig.dimension(), Rational(0));
  for (const auto& [b, c] : psi.terms()) {
    rhs[2 * b.mask] = c.re;
    rhs[2 * b.mask + 1] = c.im;
  }
  auto sol = solve_exact(detail::right_multiplication_system(t.value, basis), std::move(rhs));
  if (sol.status != SolveStatus::Unique)
    throw Error(ErrorCode::NoSolution, sol.status == SolveStatus::Inconsistent
                                           ? "no real Q'^(0) preimage"
                                           : "preimage not unique");
  ExactMV Psi(sig);
  for (std::size_t j = 0; j < basis.size(); ++j) Psi.add_term(basis[j], GaussRational(sol.x[j]));
  return Psi;
}

struct InjectivityReport {
  std::size_t rank = 0;
  std::size_t columns = 0;
  bool full_rank() const { return rank == columns; }
};

/// Rank of Y -> Y t on Q'^(0); full column rank means Y t = 0 forces Y = 0.
inline InjectivityReport verify_injectivity(const Idempotent& t) {
  const auto basis = t.spec.qprime().even_basis();
  InjectivityReport r;
  r.columns = basis.size();
  r.rank = rank(detail::right_multiplication_system(t.value, basis));
  return r;
}

/// One group of S = S0 + sum S_{mu1..muk} e^{mu1..muk}: complement indices and their Q' factor.
template <class C>
struct SComponent {
  std::vector<int> indices;
  Multivector<C> coeff;
};

template <class C>
struct SDecomposition {
  Multivector<C> S0;
  std::vector<SComponent<C>> terms;

  /// S0 + sum S_{mu..} e^{mu..}.
  Multivector<C> reassemble() const {
    Multivector<C> out = S0;
    const Signature sig = S0.signature();
    for (const auto& term : terms) {
      Blade b = Blade::from_indices(term.indices);
      out += term.coeff * Multivector<C>::basis(sig, b);
    }
    return out;
  }
  const SComponent<C>* find(const std::vector<int>& indices) const {
    for (const auto& t : terms)
      if (t.indices == indices) return &t;
    return nullptr;
  }
};

/// Groups blades by their complement part e^C (C subset of {4, 6, ...}) and writes each blade
/// as e^B = sign * e^{B cap Q'} e^C.
template <class C>
SDecomposition<C> decompose_S(const Multivector<C>& s, const QPrimeSpec& q) {
  const Signature sig = s.signature();
  if (sig.n() != q.n) throw Error(ErrorCode::SignatureMismatch, "decompose_S spec");
  if (!s.is_even() && !s.is_odd()) throw Error(ErrorCode::MixedParity, "S is not parity-homogeneous");
  const std::uint32_t qmask = q.mask();
  const std::uint32_t cmask = q.complement_mask();
  std::map<Blade, Multivector<C>> groups;
  for (const auto& [b, c] : s.terms()) {
    Blade qb(b.mask & qmask);
    Blade cb(b.mask & cmask);
    SignedBlade sb = blade_mul(qb, cb, sig);
    C value = c;
    if (sb.sign < 0) value = -value;
    auto it = groups.try_emplace(cb, Multivector<C>(sig)).first;
    it->second.add_term(qb, value);
  }
  SDecomposition<C> out{Multivector<C>(sig), {}};
  for (auto& [cb, coeff] : groups) {
    if (cb == Blade::identity())
      out.S0 = std::move(coeff);
    else
      out.terms.push_back({cb.indices(), std::move(coeff)});
  }
  return out;
}

/// Psi^ = S0 Psi + sum_k S_{mu1..muk} Psi e^{mu1-1 .. muk-1} I^k, right-multiplied by E when S
/// is odd.
template <class C>
Multivector<C> transform_wavefunction(const SpinElement<GaussRational>& s, const Multivector<C>& Psi,
                                      const QPrimeSpec& q) {
  if (!Psi.in_qprime_even(q)) throw Error(ErrorCode::NotInQPrimeEven, "Psi must lie in Q'^(0)");
  const Signature sig = s.value.signature();
  const auto dec = decompose_S(s.value, q);
  const ExactMV I = unit_I(sig);
  Multivector<C> out = dec.S0 * Psi;
  for (const auto& term : dec.terms) {
    ExactMV shifted = ExactMV::one(sig);
    ExactMV ik = ExactMV::one(sig);
    for (int mu : term.indices) {
      shifted = shifted * ExactMV::generator(sig, mu - 1);
      ik = ik * I;
    }
    out += term.coeff * Psi * (shifted * ik);
  }
  if (s.parity == Parity::Odd) out = out * unit_E(sig);
  return out;
}

}  // namespace dhga
