#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "dhga/error.hpp"
#include "dhga/linalg.hpp"
#include "dhga/multivector.hpp"

namespace dhga {

template <class R>
struct coeff_of;
template <>
struct coeff_of<Rational> {
  using type = GaussRational;
};
template <>
struct coeff_of<double> {
  using type = Complex;
};
template <class R>
using coeff_t = typename coeff_of<R>::type;

namespace detail {

inline bool real_is_zero(const Rational& x, double = 0) { return sgn(x) == 0; }
inline bool real_is_zero(double x, double tol) { return std::abs(x) <= tol; }

inline const Rational& real_part(const GaussRational& c) { return c.re; }
inline double real_part(const Complex& c) { return c.real(); }
inline bool has_imaginary(const GaussRational& c) { return !c.is_real(); }
inline bool has_imaginary(const Complex& c) { return std::abs(c.imag()) > 1e-10; }

inline double magnitude(const Rational& x) { return std::abs(x.get_d()); }
inline double magnitude(double x) { return std::abs(x); }

}  // namespace detail

/// Tolerance used for float-backend orthogonality and adjoint comparisons.
inline constexpr double kLorentzTolerance = 1e-10;

/// eta = diag(1, -1, ..., -1) of size n+1.
template <class R>
Matrix<R> minkowski_metric(int n) {
  Matrix<R> eta(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) eta(i, i) = R(i == 0 ? 1 : -1);
  return eta;
}

template <class R>
bool matrices_agree(const Matrix<R>& a, const Matrix<R>& b, double tol = kLorentzTolerance) {
  if constexpr (std::is_same_v<R, Rational>) {
    (void)tol;
    return a == b;
  } else {
    return max_abs_difference(a, b) <= tol;
  }
}

/// P^T eta P == eta (exact for rationals, within 1e-10 for doubles).
template <class R>
bool is_orthogonal(const Matrix<R>& p) {
  if (!p.square() || p.rows() == 0 || p.rows() > std::size_t(kMaxN + 1)) return false;
  const int n = int(p.rows()) - 1;
  Matrix<R> eta = minkowski_metric<R>(n);
  return matrices_agree(p.transpose() * eta * p, eta);
}

template <class R>
bool is_special(const Matrix<R>& p) {
  if (!p.square()) return false;
  R det = determinant(p);
  if constexpr (std::is_same_v<R, Rational>)
    return det == 1;
  else
    return std::abs(det - 1.0) <= kLorentzTolerance;
}

/// (n+1)x(n+1) matrix certified to satisfy P^T eta P = eta at construction.
template <class R>
class LorentzMatrix {
 public:
  static LorentzMatrix make(Matrix<R> p) {
    if (!is_orthogonal(p)) throw Error(ErrorCode::NotOrthogonal, "P^T eta P != eta");
    LorentzMatrix out;
    out.n_ = int(p.rows()) - 1;
    out.p_ = std::move(p);
    return out;
  }
  static LorentzMatrix identity(int n) { return make(Matrix<R>::identity(n + 1)); }

  int n() const { return n_; }
  const Matrix<R>& matrix() const { return p_; }
  const R& operator()(int r, int c) const { return p_(r, c); }
  bool special() const { return is_special(p_); }

  /// Q = P^{-1} = eta P^T eta.
  LorentzMatrix inverse() const {
    Matrix<R> eta = minkowski_metric<R>(n_);
    LorentzMatrix out;
    out.n_ = n_;
    out.p_ = eta * p_.transpose() * eta;
    return out;
  }

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    if (a.n_ != b.n_) throw Error(ErrorCode::SignatureMismatch, "Lorentz product sizes");
    LorentzMatrix out;
    out.n_ = a.n_;
    out.p_ = a.p_ * b.p_;
    return out;
  }
  friend bool operator==(const LorentzMatrix& a, const LorentzMatrix& b) {
    return a.n_ == b.n_ && matrices_agree(a.p_, b.p_);
  }

 private:
  int n_ = 0;
  Matrix<R> p_;
};

enum class Parity { Even, Odd };
enum class PinClass { Spin, PinMinusSpin };

constexpr std::string_view to_string(PinClass c) {
  return c == PinClass::Spin ? "Spin" : "PinMinusSpin";
}

/// Certified element of Pin(1,n), possibly carrying a scalar normalization: value * ~value
/// equals norm * e with norm != 0. A unit element has norm = +/-1; on the exact backend the
/// normalizer sqrt|norm| may be irrational, in which case the unnormalized value is kept. Every
/// identity the library checks is homogeneous in the spin element, so the scale is harmless.
template <class C>
struct SpinElement {
  Multivector<C> value;
  Parity parity = Parity::Even;
  PinClass certificate = PinClass::Spin;
  C norm = coeff_traits<C>::one();

  Multivector<C> inverse() const {
    C inv = coeff_traits<C>::one();
    inv /= norm;
    return scale(value.reversion(), inv);
  }
  bool is_unit() const {
    if constexpr (coeff_traits<C>::exact)
      return abs(norm.re) == 1 && norm.is_real();
    else
      return std::abs(std::abs(norm) - 1.0) <= kLorentzTolerance;
  }
};

namespace detail {

template <class C>
bool negligible(const C& c, double scale) {
  if constexpr (coeff_traits<C>::exact) {
    (void)scale;
    return c.is_zero();
  } else {
    return std::abs(c) <= kLorentzTolerance * std::max(1.0, scale);
  }
}

template <class C>
double coefficient_scale(const Multivector<C>& u) {
  double s = 0;
  for (const auto& [b, c] : u.terms()) {
    if constexpr (coeff_traits<C>::exact)
      s = std::max(s, std::abs(c.to_complex()));
    else
      s = std::max(s, std::abs(c));
  }
  return s;
}

/// Scalar value of u if u is (numerically) a scalar multiple of e.
template <class C>
std::optional<C> scalar_value(const Multivector<C>& u, double scale) {
  for (const auto& [b, c] : u.terms())
    if (b.grade() != 0 && !negligible(c, scale)) return std::nullopt;
  return u.coeff(Blade::identity());
}

template <class C>
bool is_vector(const Multivector<C>& u, double scale) {
  for (const auto& [b, c] : u.terms())
    if (b.grade() != 1 && !negligible(c, scale)) return false;
  return true;
}

/// Size of rounding errors in T x T^{-1} relative to unit coefficients: |T|^2 / |N|.
template <class C>
double conjugation_scale(const SpinElement<C>& s) {
  const double scale = coefficient_scale(s.value);
  double norm;
  if constexpr (coeff_traits<C>::exact)
    norm = std::abs(s.norm.to_complex());
  else
    norm = std::abs(s.norm);
  return norm > 0 ? scale * scale / norm : 1.0;
}

}  // namespace detail

/// Certifies T in Pin(1,n): parity-homogeneous, T ~T = ~T T = N e with N != 0 (so
/// T^{-1} = ~T / N), real, and T x T^{-1} a vector for every generator x.
template <class C>
SpinElement<C> classify_spin(const Multivector<C>& t) {
  auto fail = [](const std::string& why) { return Error(ErrorCode::NotInPin, why); };
  if (t.is_zero()) throw fail("zero element is not invertible");
  for (const auto& [b, c] : t.terms())
    if (detail::has_imaginary(c)) throw fail("coefficients must be real");
  SpinElement<C> s;
  if (t.is_even()) {
    s.parity = Parity::Even;
    s.certificate = PinClass::Spin;
  } else if (t.is_odd()) {
    s.parity = Parity::Odd;
    s.certificate = PinClass::PinMinusSpin;
  } else {
    throw fail("mixed parity (neither even nor odd)");
  }
  const double scale = detail::coefficient_scale(t);
  const double scale2 = scale * scale;
  auto right = detail::scalar_value(t * t.reversion(), scale2);
  auto left = detail::scalar_value(t.reversion() * t, scale2);
  if (!right || !left || detail::negligible(*right, scale2) ||
      !detail::negligible(C(*right - *left), scale2))
    throw fail("T^{-1} != +/- reverse(T) up to scale (T ~T is not a nonzero scalar)");
  s.value = t;
  s.norm = *right;
  const Signature sig = t.signature();
  const Multivector<C> inv = s.inverse();
  const double conditioning = detail::conjugation_scale(s);
  for (int mu = 0; mu <= sig.n(); ++mu) {
    auto image = t * Multivector<C>::generator(sig, mu) * inv;
    if (!detail::is_vector(image, conditioning))
      throw fail("T e" + std::to_string(mu) + " T^{-1} is not a vector");
  }
  return s;
}

/// Float copy scaled to unit norm (|T ~T| = 1); the scale is applied coefficient-wise so large
/// unnormalized exact values do not overflow the double range.
inline SpinElement<Complex> to_float_unit(const SpinElement<GaussRational>& s) {
  const double root = std::sqrt(std::abs(s.norm.re.get_d()));
  FloatMV v(s.value.signature());
  for (const auto& [b, c] : s.value.terms()) v.add_term(b, Complex(c.re.get_d() / root, c.im.get_d() / root));
  return classify_spin(v);
}

/// Matrix P with S^{-1} e^mu S = sum_nu P(mu, nu) e^nu (rows read off generator images).
template <class C>
LorentzMatrix<real_t<C>> adjoint_matrix(const SpinElement<C>& s) {
  using R = real_t<C>;
  const Signature sig = s.value.signature();
  const int n = sig.n();
  const Multivector<C> inv = s.inverse();
  Matrix<R> p(n + 1, n + 1);
  for (int mu = 0; mu <= n; ++mu) {
    auto image = inv * Multivector<C>::generator(sig, mu) * s.value;
    if (!detail::is_vector(image, detail::conjugation_scale(s)))
      throw Error(ErrorCode::NonVectorImage, "S^{-1} e" + std::to_string(mu) + " S");
    for (int nu = 0; nu <= n; ++nu)
      p(mu, nu) = detail::real_part(image.coeff(Blade::generator(nu)));
  }
  return LorentzMatrix<R>::make(std::move(p));
}

/// The reading T e^mu T^{-1} = sum_nu P(mu, nu) e^nu; equals adjoint_matrix of T^{-1}.
template <class C>
LorentzMatrix<real_t<C>> conjugation_matrix(const SpinElement<C>& s) {
  SpinElement<C> inv = s;
  inv.value = s.value.reversion();
  return adjoint_matrix(inv);
}

namespace detail {

template <class R>
R quadratic_form(const std::vector<R>& v) {
  R q = 0;
  for (std::size_t i = 0; i < v.size(); ++i) q += (i == 0 ? v[i] * v[i] : R(-(v[i] * v[i])));
  return q;
}

template <class R>
R bilinear(const std::vector<R>& a, const std::vector<R>& b) {
  R s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i == 0 ? a[i] * b[i] : R(-(a[i] * b[i])));
  return s;
}

/// M <- R_v M with R_v(x) = x - 2 <x,v>/<v,v> v applied to each column.
template <class R>
void reflect_columns(Matrix<R>& m, const std::vector<R>& v) {
  const std::size_t dim = m.rows();
  R qv = quadratic_form(v);
  std::vector<R> col(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) col[r] = m(r, c);
    R f = R(2 * bilinear(col, v)) / qv;
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = col[r] - f * v[r];
  }
}

template <class R>
std::vector<R> column(const Matrix<R>& m, std::size_t c) {
  std::vector<R> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, c);
  return out;
}

template <class R>
bool column_is_unit(const Matrix<R>& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!real_is_zero(R(m(r, c) - R(r == c ? 1 : 0)), 1e-12)) return false;
  return true;
}

/// Rescales a rational vector to a primitive integer vector (same reflection).
inline void primitive(std::vector<Rational>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g != 0)
    for (auto& x : v) x /= g;
}
inline void primitive(std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m > 0)
    for (double& x : v) x /= m;
}

template <class C, class R>
Multivector<C> vector_mv(Signature sig, const std::vector<R>& v) {
  Multivector<C> out(sig);
  for (int i = 0; i <= sig.n(); ++i) out.add_term(Blade::generator(i), C(v[i]));
  return out;
}

}  // namespace detail

/// Lifts P to a spin element S with adjoint_matrix(S) == P.
///
/// M = P^T is reduced to the identity by reflections, fixing one basis vector per step: the
/// pivot e_i needs v = M e_i - e_i to be non-null. When every remaining pivot is null the
/// pair R_{e_i} R_{M e_i + e_i} is used instead (Q(x-y) + Q(x+y) = 4 Q(x) != 0). The product
/// of the reflection vectors in reverse order, times the pseudoscalar when the count is odd
/// (odd n only), is S up to scale. S is then normalized when the normalizer is representable,
/// and its sign fixed so that the first nonzero coefficient (canonical blade order) is positive.
template <class R>
SpinElement<coeff_t<R>> lift(const LorentzMatrix<R>& p) {
  using C = coeff_t<R>;
  const int n = p.n();
  const Signature sig(n);
  if (n % 2 == 0 && !p.special())
    throw Error(ErrorCode::NotSpecial, "even n requires det P = 1");
  Matrix<R> m = p.matrix().transpose();
  const std::size_t dim = std::size_t(n) + 1;
  std::vector<std::vector<R>> reflections;
  const double null_tol = 1e-12;

  for (std::size_t guard = 0; guard <= 2 * dim; ++guard) {
    std::vector<std::size_t> unfixed;
    for (std::size_t i = 0; i < dim; ++i)
      if (!detail::column_is_unit(m, i)) unfixed.push_back(i);
    if (unfixed.empty()) break;
    bool reflected = false;
    for (std::size_t i : unfixed) {
      std::vector<R> v = detail::column(m, i);
      v[i] -= R(1);
      if (detail::real_is_zero(detail::quadratic_form(v), null_tol)) continue;  // null pivot
      detail::primitive(v);
      detail::reflect_columns(m, v);
      reflections.push_back(std::move(v));
      reflected = true;
      break;
    }
    if (reflected) continue;
    // Every candidate x - y is null: map y -> -x with x + y, then flip x.
    const std::size_t i = unfixed.front();
    std::vector<R> v = detail::column(m, i);
    v[i] += R(1);
    if (detail::real_is_zero(detail::quadratic_form(v), null_tol))
      throw Error(ErrorCode::NoPivot, "both x - y and x + y are null");
    detail::primitive(v);
    detail::reflect_columns(m, v);
    reflections.push_back(std::move(v));
    std::vector<R> axis(dim, R(0));
    axis[i] = R(1);
    detail::reflect_columns(m, axis);
    reflections.push_back(std::move(axis));
  }
  for (std::size_t i = 0; i < dim; ++i)
    if (!detail::column_is_unit(m, i)) throw Error(ErrorCode::NoPivot, "reflection sweep did not converge");

  // t = w_k ... w_1 for reflections recorded as w_1, w_2, ...
  Multivector<C> t = Multivector<C>::one(sig);
  for (const auto& w : reflections) t = detail::vector_mv<C>(sig, w) * t;
  if (reflections.size() % 2 == 1) {
    // conjugation by the odd product equals -M; the pseudoscalar (n odd) contributes -I
    t = t * Multivector<C>::basis(sig, Blade(sig.full_mask()));
  }

  C norm = (t * t.reversion()).coeff(Blade::identity());
  if constexpr (coeff_traits<C>::exact) {
    if (auto root = rational_sqrt(Rational(abs(norm.re)))) t = scale(t, C(Rational(1) / *root));
  } else {
    t = scale(t, C(1.0 / std::sqrt(std::abs(norm.real()))));
  }
  if (!t.is_zero() && detail::real_part(t.terms().begin()->second) < 0) t = -t;

  SpinElement<C> s = classify_spin(t);
  if (!(adjoint_matrix(s) == p))
    throw Error(ErrorCode::NoPivot, "lift does not reproduce P");
  return s;
}

/// As lift, but requires an exactly normalized result (norm = +/-1).
template <class R>
SpinElement<coeff_t<R>> lift_unit(const LorentzMatrix<R>& p) {
  auto s = lift(p);
  if (!s.is_unit())
    throw Error(ErrorCode::IrrationalNorm, "normalizer sqrt|T~T| is not rational; use the float backend");
  return s;
}

/// Double-cover check: if ad(T) is the identity, T must be a scalar (+/-e once normalized).
template <class C>
bool kernel_check(const SpinElement<C>& s) {
  const auto p = adjoint_matrix(s);
  if (!(p == LorentzMatrix<real_t<C>>::identity(p.n()))) return true;
  const double scale = detail::coefficient_scale(s.value);
  return detail::scalar_value(s.value, scale).has_value();
}

}  // namespace dhga
