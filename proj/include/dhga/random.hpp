#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "dhga/dh_operator.hpp"
#include "dhga/lorentz.hpp"
#include "dhga/polynomial.hpp"
#include "dhga/spinor_ideal.hpp"

namespace dhga {

using Rng = std::mt19937_64;

/// Independent generator for one trial of a seeded run.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(trial),
                    std::uint32_t(trial >> 32)};
  return Rng(seq);
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Numerator in [-9, 9], denominator in {1, 2, 4}.
inline Rational random_rational(Rng& rng, bool nonzero = false) {
  int num = 0;
  do num = uniform_int(rng, -9, 9);
  while (nonzero && num == 0);
  static constexpr int kDen[] = {1, 2, 4};
  Rational q(num, kDen[uniform_int(rng, 0, 2)]);
  q.canonicalize();
  return q;
}

/// Real polynomial of total degree <= max_degree in the given variables.
inline Polynomial random_polynomial(Rng& rng, int nvars, const std::vector<int>& vars, int max_degree,
                                    int max_terms = 4) {
  Polynomial p(nvars);
  const int terms = uniform_int(rng, 1, max_terms);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> exps(nvars, 0);
    const int deg = uniform_int(rng, 0, max_degree);
    for (int j = 0; j < deg && !vars.empty(); ++j) ++exps[vars[uniform_int(rng, 0, int(vars.size()) - 1)]];
    p += Polynomial::monomial(nvars, Monomial::from_exponents(exps), GaussRational(random_rational(rng, true)));
  }
  return p;
}

/// Up to four distinct coordinate indices.
inline std::vector<int> random_active_vars(Rng& rng, int nvars) {
  std::vector<int> all(nvars);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(nvars, uniform_int(rng, 1, 4)));
  std::sort(all.begin(), all.end());
  return all;
}

/// Psi in Q'^(0): one to four blades with degree <= 2 coefficients.
inline FieldMV random_Psi(Rng& rng, const IdempotentSpec& spec) {
  const Signature sig = spec.signature();
  const auto basis = spec.qprime().even_basis();
  const int nvars = spec.n + 1;
  const auto vars = random_active_vars(rng, nvars);
  FieldMV Psi(sig);
  const int blades = uniform_int(rng, 1, 4);
  for (int k = 0; k < blades; ++k)
    Psi += FieldMV::basis(sig, basis[uniform_int(rng, 0, int(basis.size()) - 1)],
                          random_polynomial(rng, nvars, vars, 2));
  return Psi;
}

/// Potential with degree <= 1 components.
inline Potential random_potential(Rng& rng, const IdempotentSpec& spec) {
  const int nvars = spec.n + 1;
  const auto vars = random_active_vars(rng, nvars);
  Potential a;
  for (int mu = 0; mu <= spec.n; ++mu) a.a.push_back(random_polynomial(rng, nvars, vars, 1, 2));
  return a;
}

inline DHProblem random_problem(Rng& rng, const IdempotentSpec& spec) {
  Rational m = random_rational(rng);
  Potential a = random_potential(rng, spec);
  FieldMV Psi = random_Psi(rng, spec);
  return DHProblem::make(spec, std::move(m), std::move(a), std::move(Psi));
}

/// Real exact multivector with up to max_terms random blades.
inline ExactMV random_mv(Rng& rng, Signature sig, int max_terms = 6, bool complex = false) {
  ExactMV u(sig);
  const int terms = uniform_int(rng, 1, max_terms);
  const int dim = int(sig.dimension());
  for (int k = 0; k < terms; ++k) {
    Blade b(std::uint32_t(uniform_int(rng, 0, dim - 1)));
    u.add_term(b, GaussRational(random_rational(rng), complex ? random_rational(rng) : Rational(0)));
  }
  return u;
}

// ---- Lorentz samples ----

/// Pythagorean (cos, sin) pairs.
inline const std::vector<std::pair<Rational, Rational>>& rational_rotations() {
  static const std::vector<std::pair<Rational, Rational>> r{
      {Rational(3, 5), Rational(4, 5)}, {Rational(5, 13), Rational(12, 13)}, {Rational(7, 25), Rational(24, 25)}};
  return r;
}

/// (cosh, sinh) pairs with rational entries.
inline const std::vector<std::pair<Rational, Rational>>& rational_boosts() {
  static const std::vector<std::pair<Rational, Rational>> b{{Rational(5, 3), Rational(4, 3)},
                                                            {Rational(5, 4), Rational(3, 4)},
                                                            {Rational(13, 5), Rational(12, 5)},
                                                            {Rational(17, 8), Rational(15, 8)}};
  return b;
}

/// Rotation by (c, s) in the spatial plane (i, j).
inline Matrix<Rational> plane_rotation(int n, int i, int j, const Rational& c, const Rational& s) {
  Matrix<Rational> r = Matrix<Rational>::identity(n + 1);
  r(i, i) = c;
  r(j, j) = c;
  r(i, j) = -s;
  r(j, i) = s;
  return r;
}

/// Boost by (ch, sh) in the plane (0, j).
inline Matrix<Rational> plane_boost(int n, int j, const Rational& ch, const Rational& sh) {
  Matrix<Rational> b = Matrix<Rational>::identity(n + 1);
  b(0, 0) = ch;
  b(j, j) = ch;
  b(0, j) = sh;
  b(j, 0) = sh;
  return b;
}

/// Permutation of the spatial axes with random sign flips on all axes.
inline Matrix<Rational> random_signed_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix<Rational> m(n + 1, n + 1);
  m(0, 0) = uniform_int(rng, 0, 1) ? 1 : -1;
  for (int i = 1; i <= n; ++i) m(i, perm[i - 1]) = uniform_int(rng, 0, 1) ? 1 : -1;
  return m;
}

/// Product of up to four factors drawn from signed permutations, rational rotations and
/// rational boosts. det_sign (when given) fixes the determinant by a final axis flip.
inline LorentzMatrix<Rational> random_lorentz(Rng& rng, int n, std::optional<int> det_sign = std::nullopt) {
  Matrix<Rational> p = Matrix<Rational>::identity(n + 1);
  const int factors = uniform_int(rng, 1, 4);
  for (int k = 0; k < factors; ++k) {
    switch (uniform_int(rng, 0, 2)) {
      case 0:
        p = p * random_signed_permutation(rng, n);
        break;
      case 1: {
        int i = uniform_int(rng, 1, n);
        int j = uniform_int(rng, 1, n - 1);
        if (j >= i) ++j;
        const auto& [c, s] = rational_rotations()[uniform_int(rng, 0, 2)];
        p = p * plane_rotation(n, i, j, c, uniform_int(rng, 0, 1) ? s : Rational(-s));
        break;
      }
      default: {
        const auto& [ch, sh] = rational_boosts()[uniform_int(rng, 0, 3)];
        p = p * plane_boost(n, uniform_int(rng, 1, n), ch, uniform_int(rng, 0, 1) ? sh : Rational(-sh));
        break;
      }
    }
  }
  if (det_sign && determinant(p) != *det_sign) {
    Matrix<Rational> flip = Matrix<Rational>::identity(n + 1);
    const int axis = uniform_int(rng, 1, n);
    flip(axis, axis) = -1;
    p = p * flip;
  }
  return LorentzMatrix<Rational>::make(std::move(p));
}

/// Certified spin element lifted from a random rational Lorentz matrix; odd parity needs odd n.
inline SpinElement<GaussRational> random_spin_element(Rng& rng, int n, Parity parity) {
  if (parity == Parity::Odd && n % 2 == 0)
    throw Error(ErrorCode::OddSpinElementInEvenDimension, "odd elements map outside SO for even n");
  return lift(random_lorentz(rng, n, parity == Parity::Even ? 1 : -1));
}

}  // namespace dhga
