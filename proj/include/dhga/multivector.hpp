#pragma once

#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "dhga/blade.hpp"
#include "dhga/error.hpp"
#include "dhga/qprime.hpp"
#include "dhga/scalar.hpp"

namespace dhga {

/// Sparse element of Cl(1,n) (or its complexification) with coefficients in C.
///
/// C is GaussRational (exact backend), Complex (float backend) or Polynomial (fields over
/// R^{1,n}). Zero coefficients are never stored.
template <class C>
class Multivector {
 public:
  using coeff_type = C;
  using traits = coeff_traits<C>;
  using term_map = std::map<Blade, C>;

  Multivector() = default;
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, C value) {
    Multivector u(sig);
    u.add_term(Blade::identity(), std::move(value));
    return u;
  }
  static Multivector one(Signature sig) { return scalar(sig, traits::one()); }
  static Multivector generator(Signature sig, int index) {
    if (index < 0 || index > sig.n())
      throw Error(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(index));
    return basis(sig, Blade::generator(index));
  }
  static Multivector basis(Signature sig, Blade b, C value = traits::one()) {
    if (!b.valid_for(sig)) throw Error(ErrorCode::InvalidBlade, b.to_string());
    Multivector u(sig);
    u.add_term(b, std::move(value));
    return u;
  }

  Signature signature() const { return sig_; }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? traits::zero() : it->second;
  }

  /// Adds value to the coefficient of b, pruning the entry if it vanishes.
  void add_term(Blade b, const C& value) {
    if (traits::is_zero(value)) return;
    auto [it, inserted] = terms_.try_emplace(b, value);
    if (!inserted) {
      it->second += value;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Applies f to every coefficient; entries mapped to zero are dropped.
  template <class F>
  auto map_coeffs(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<Blade>(), std::declval<const C&>()))>;
    Multivector<R> out(sig_);
    for (const auto& [b, c] : terms_) out.add_term(b, f(b, c));
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    check_signature(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_signature(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(const Multivector& a) {
    return a.map_coeffs([](Blade, const C& c) { return C(-c); });
  }

  /// Exact structural equality (float backend: coefficientwise within kTolerance).
  friend bool operator==(const Multivector& a, const Multivector& b) {
    if (a.sig_ != b.sig_) return false;
    if constexpr (!traits::exact) {
      return approx_equal(a, b, traits::kTolerance);
    } else {
      return a.terms_ == b.terms_;
    }
  }

  // ---- grade structure ----

  Multivector grade_project(int k) const {
    return filter([k](Blade b) { return b.grade() == k; });
  }
  Multivector even_part() const {
    return filter([](Blade b) { return b.grade() % 2 == 0; });
  }
  Multivector odd_part() const {
    return filter([](Blade b) { return b.grade() % 2 == 1; });
  }
  bool is_even() const { return odd_part().is_zero(); }
  bool is_odd() const { return even_part().is_zero(); }
  bool is_grade(int k) const {
    for (const auto& [b, c] : terms_)
      if (b.grade() != k) return false;
    return true;
  }
  bool is_scalar() const { return is_grade(0); }

  template <class Pred>
  Multivector filter(Pred keep) const {
    Multivector out(sig_);
    for (const auto& [b, c] : terms_)
      if (keep(b)) out.terms_.emplace(b, c);
    return out;
  }

  // ---- involutions ----

  Multivector reversion() const {
    return map_coeffs([](Blade b, const C& c) { return reversion_sign(b.grade()) > 0 ? c : C(-c); });
  }
  Multivector grade_involution() const {
    return map_coeffs(
        [](Blade b, const C& c) { return grade_involution_sign(b.grade()) > 0 ? c : C(-c); });
  }
  Multivector complex_conjugate() const {
    return map_coeffs([](Blade, const C& c) { return traits::conj(c); });
  }

  /// U^dagger = e0 * reverse(conj(U)) * e0.
  Multivector hermitian_conjugate() const {
    // e0 B e0 = (+/-) B: the sign is computed blade by blade, no products needed.
    const Blade e0 = Blade::generator(0);
    return map_coeffs([&](Blade b, const C& c) {
      SignedBlade left = blade_mul(e0, b, sig_);
      SignedBlade both = blade_mul(left.blade, e0, sig_);
      int sign = left.sign * both.sign * reversion_sign(b.grade());
      C cc = traits::conj(c);
      return sign > 0 ? cc : C(-cc);
    });
  }

  /// True iff every blade uses only generators of q.
  bool in_qprime(const QPrimeSpec& q) const {
    if (q.n != sig_.n()) throw Error(ErrorCode::SignatureMismatch, "Q' spec has different n");
    std::uint32_t outside = ~q.mask();
    for (const auto& [b, c] : terms_)
      if (b.mask & outside) return false;
    return true;
  }
  bool in_qprime_even(const QPrimeSpec& q) const { return in_qprime(q) && is_even(); }

  void check_signature(const Multivector& o) const { check_signature(o.sig_); }
  void check_signature(Signature other) const {
    if (other != sig_)
      throw Error(ErrorCode::SignatureMismatch,
                  "n=" + std::to_string(sig_.n()) + " vs n=" + std::to_string(other.n()));
  }

 private:
  template <class>
  friend class Multivector;

  Signature sig_;
  term_map terms_;
};

template <class A, class B>
using product_coeff_t = std::decay_t<decltype(std::declval<const A&>() * std::declval<const B&>())>;

/// Geometric product, bilinear over blade_mul. Mixed coefficient rings are allowed
/// (e.g. polynomial field times constant multivector).
template <class A, class B>
Multivector<product_coeff_t<A, B>> operator*(const Multivector<A>& u, const Multivector<B>& v) {
  using R = product_coeff_t<A, B>;
  Signature sig = u.signature();
  if (u.signature() != v.signature())
    throw Error(ErrorCode::SignatureMismatch, "n=" + std::to_string(u.signature().n()) +
                                                  " vs n=" + std::to_string(v.signature().n()));
  Multivector<R> out(sig);
  if (u.is_zero() || v.is_zero()) return out;
  std::vector<R> acc(sig.dimension());
  std::vector<char> touched(sig.dimension(), 0);
  for (const auto& [ba, ca] : u.terms()) {
    for (const auto& [bb, cb] : v.terms()) {
      SignedBlade sb = blade_mul(ba, bb, sig);
      R prod = ca * cb;
      if (sb.sign > 0)
        acc[sb.blade.mask] += prod;
      else
        acc[sb.blade.mask] -= prod;
      touched[sb.blade.mask] = 1;
    }
  }
  for (std::size_t m = 0; m < acc.size(); ++m)
    if (touched[m]) out.add_term(Blade(static_cast<std::uint32_t>(m)), acc[m]);
  return out;
}

/// Scalar multiples (coefficient on the left or right).
template <class C>
Multivector<C> scale(const Multivector<C>& u, const C& s) {
  return u.map_coeffs([&](Blade, const C& c) { return C(c * s); });
}

template <class C>
bool approx_equal(const Multivector<C>& a, const Multivector<C>& b, double tol) {
  if (a.signature() != b.signature()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  auto small = [&](const C& c) { return std::abs(c) <= tol; };
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      if (!small(ia->second)) return false;
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      if (!small(ib->second)) return false;
      ++ib;
    } else {
      if (!small(ia->second - ib->second)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

/// Largest coefficient magnitude of a - b (float backend diagnostics).
template <class C>
double max_abs_difference(const Multivector<C>& a, const Multivector<C>& b) {
  double worst = 0;
  const Multivector<C> diff = a - b;
  for (const auto& [blade, c] : diff.terms()) worst = std::max(worst, double(std::abs(c)));
  return worst;
}

using ExactMV = Multivector<GaussRational>;
using FloatMV = Multivector<Complex>;

inline FloatMV to_float(const ExactMV& u) {
  return u.map_coeffs([](Blade, const GaussRational& c) { return c.to_complex(); });
}

/// Exact multivector with integer/rational coefficient on a single blade.
inline ExactMV make_blade(Signature sig, std::initializer_list<int> indices,
                          GaussRational value = 1) {
  return ExactMV::basis(sig, Blade::from_indices(std::vector<int>(indices)), std::move(value));
}

}  // namespace dhga
