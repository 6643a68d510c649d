#pragma once

#include <cmath>
#include <complex>

#include "dhga/rational.hpp"

namespace dhga {

/// Coefficient-ring hooks used by Multivector<C>.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<GaussRational> {
  static constexpr bool exact = true;
  static bool is_zero(const GaussRational& c) { return c.is_zero(); }
  static bool equal(const GaussRational& a, const GaussRational& b) { return a == b; }
  static GaussRational conj(const GaussRational& c) { return c.conj(); }
  static GaussRational zero() { return {}; }
  static GaussRational one() { return 1; }
};

using Complex = std::complex<double>;

/// Float backend: coefficients below kPrune are dropped, comparisons use kTolerance.
template <>
struct coeff_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr double kPrune = 1e-14;
  static constexpr double kTolerance = 1e-12;
  static bool is_zero(const Complex& c) { return std::abs(c) < kPrune; }
  static bool equal(const Complex& a, const Complex& b) { return std::abs(a - b) <= kTolerance; }
  static Complex conj(const Complex& c) { return std::conj(c); }
  static Complex zero() { return {}; }
  static Complex one() { return 1.0; }
};

/// Real field underlying a coefficient ring (Rational for the exact backend, double for float).
template <class C>
struct real_of;
template <>
struct real_of<GaussRational> {
  using type = Rational;
};
template <>
struct real_of<Complex> {
  using type = double;
};
template <class C>
using real_t = typename real_of<C>::type;

inline Complex to_complex(const GaussRational& z) { return z.to_complex(); }

}  // namespace dhga
