#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dhga/error.hpp"
#include "dhga/linalg.hpp"
#include "dhga/multivector.hpp"
#include "dhga/rational.hpp"

namespace dhga {

/// Maximum number of coordinates x^0..x^n (n <= 7).
inline constexpr int kMaxVars = kMaxN + 1;

/// Total-degree cap enforced by polynomial products and substitutions.
inline int& poly_degree_cap() {
  static int cap = 6;
  return cap;
}

/// Exponent vector packed one byte per variable, x^0 in the most significant byte, so that
/// integer order is lexicographic order and multiplication is addition.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t key) : key_(key) {}

  static Monomial variable(int index, int power = 1) {
    return Monomial(std::uint64_t(power) << shift(index));
  }
  static Monomial from_exponents(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw Error(ErrorCode::LengthMismatch, "too many exponents");
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 255) throw Error(ErrorCode::DegreeCapExceeded, "exponent range");
      k |= std::uint64_t(exps[i]) << shift(int(i));
    }
    return Monomial(k);
  }

  constexpr std::uint64_t key() const { return key_; }
  int exponent(int index) const { return int((key_ >> shift(index)) & 0xFF); }
  int degree() const {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += exponent(i);
    return d;
  }
  /// Highest variable index with a nonzero exponent plus one.
  int variable_span() const {
    for (int i = kMaxVars; i-- > 0;)
      if (exponent(i) != 0) return i + 1;
    return 0;
  }

  friend Monomial operator*(Monomial a, Monomial b) { return Monomial(a.key_ + b.key_); }
  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  static constexpr int shift(int index) { return 8 * (kMaxVars - 1 - index); }
  std::uint64_t key_ = 0;
};

/// Polynomial in x^0..x^{nvars-1} with Gaussian-rational coefficients.
class Polynomial {
 public:
  using term_map = std::map<Monomial, GaussRational>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(check_nvars(nvars)) {}

  static Polynomial constant(int nvars, const GaussRational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial{}, c);
    return p;
  }
  static Polynomial variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
      throw Error(ErrorCode::IndexOutOfRange, "variable x" + std::to_string(index));
    Polynomial p(nvars);
    p.add_term(Monomial::variable(index), 1);
    return p;
  }
  static Polynomial monomial(int nvars, Monomial m, const GaussRational& c) {
    if (m.variable_span() > nvars) throw Error(ErrorCode::IndexOutOfRange, "monomial variable");
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  GaussRational coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRational{} : it->second;
  }

  void add_term(Monomial m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const GaussRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const GaussRational& s) { return a *= s; }
  friend Polynomial operator*(const GaussRational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.nvars_, b.nvars_));
    if (a.is_zero() || b.is_zero()) return out;
    if (a.degree() + b.degree() > poly_degree_cap())
      throw Error(ErrorCode::DegreeCapExceeded, "product degree " +
                                                    std::to_string(a.degree() + b.degree()) +
                                                    " > cap " + std::to_string(poly_degree_cap()));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial conj() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = c.conj();
    return out;
  }

  /// Formal partial derivative with respect to x^index.
  Polynomial pderiv(int index) const {
    if (index < 0 || index >= nvars_)
      throw Error(ErrorCode::IndexOutOfRange,
                  "d/dx" + std::to_string(index) + " with " + std::to_string(nvars_) + " variables");
    Polynomial out(nvars_);
    const Monomial step = Monomial::variable(index);
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(index);
      if (e == 0) continue;
      out.add_term(Monomial(m.key() - step.key()), c * GaussRational(e));
    }
    return out;
  }

  /// p with each x^mu replaced by sum_nu M(mu, nu) x^nu.
  Polynomial linear_substitute(const Matrix<Rational>& m) const {
    if (!m.square() || int(m.rows()) < nvars_ || int(m.rows()) > kMaxVars)
      throw Error(ErrorCode::LengthMismatch, "substitution matrix must be square with >= nvars rows");
    if (degree() > poly_degree_cap())
      throw Error(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(degree()));
    const int out_vars = int(m.rows());
    // powers[mu][k] = (sum_nu M(mu,nu) x^nu)^k, filled on demand
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power = [&](int mu, int k) -> const Polynomial& {
      auto& cache = powers[mu];
      if (cache.empty()) {
        cache.push_back(constant(out_vars, 1));
        Polynomial lin(out_vars);
        for (int nu = 0; nu < out_vars; ++nu)
          lin.add_term(Monomial::variable(nu), GaussRational(m(mu, nu)));
        cache.push_back(std::move(lin));
      }
      while (int(cache.size()) <= k) cache.push_back(cache.back() * cache[1]);
      return cache[k];
    };
    Polynomial out(out_vars);
    for (const auto& [mono, c] : terms_) {
      Polynomial term = constant(out_vars, c);
      for (int mu = 0; mu < nvars_; ++mu) {
        int e = mono.exponent(mu);
        if (e > 0) term = term * power(mu, e);
      }
      out += term;
    }
    return out;
  }

  GaussRational eval(const std::vector<Rational>& point) const {
    if (int(point.size()) < nvars_) throw Error(ErrorCode::LengthMismatch, "evaluation point");
    GaussRational sum;
    for (const auto& [mono, c] : terms_) {
      Rational v = 1;
      for (int mu = 0; mu < nvars_; ++mu)
        for (int k = mono.exponent(mu); k > 0; --k) v *= point[mu];
      sum += c * GaussRational(v);
    }
    return sum;
  }

  Complex eval(const std::vector<double>& point) const {
    if (int(point.size()) < nvars_) throw Error(ErrorCode::LengthMismatch, "evaluation point");
    Complex sum;
    for (const auto& [mono, c] : terms_) {
      double v = 1;
      for (int mu = 0; mu < nvars_; ++mu) v *= std::pow(point[mu], mono.exponent(mu));
      sum += c.to_complex() * v;
    }
    return sum;
  }

  /// "3/2*x0^2*x1 - x3"; terms in descending lexicographic order, "0" for the zero polynomial.
  std::string to_string() const;

 private:
  static int check_nvars(int nvars) {
    if (nvars < 0 || nvars > kMaxVars)
      throw Error(ErrorCode::IndexOutOfRange, "nvars " + std::to_string(nvars));
    return nvars;
  }

  int nvars_ = 0;
  term_map terms_;
};

namespace detail {

inline std::string monomial_string(Monomial m) {
  std::string s;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

/// Splits a coefficient into (negative?, magnitude text) for "a - b" style printing;
/// magnitude text is empty when the magnitude is exactly 1 and a factor follows.
inline std::pair<bool, std::string> coefficient_text(const GaussRational& c, bool has_factor) {
  if (c.is_real()) {
    bool neg = sgn(c.re) < 0;
    Rational mag = abs(c.re);
    if (has_factor && mag == 1) return {neg, ""};
    return {neg, mag.get_str()};
  }
  if (sgn(c.re) == 0) {
    bool neg = sgn(c.im) < 0;
    Rational mag = abs(c.im);
    return {neg, mag == 1 ? "i" : mag.get_str() + "i"};
  }
  std::string s = "(" + c.re.get_str() + (sgn(c.im) < 0 ? "-" : "+");
  Rational mag = abs(c.im);
  s += (mag == 1 ? std::string() : mag.get_str()) + "i)";
  return {false, s};
}

}  // namespace detail

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    bool has_factor = mono != Monomial{};
    auto [neg, mag] = detail::coefficient_text(c, has_factor);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string factor = detail::monomial_string(mono);
    if (mag.empty())
      out += factor;
    else if (has_factor)
      out += mag + "*" + factor;
    else
      out += mag;
  }
  return out;
}

template <>
struct coeff_traits<Polynomial> {
  static constexpr bool exact = true;
  static bool is_zero(const Polynomial& p) { return p.is_zero(); }
  static bool equal(const Polynomial& a, const Polynomial& b) { return a == b; }
  static Polynomial conj(const Polynomial& p) { return p.conj(); }
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial::constant(0, 1); }
};

/// Multivector-valued polynomial field on R^{1,n}.
using FieldMV = Multivector<Polynomial>;

/// Electromagnetic potential (a_0, ..., a_n).
struct Potential {
  std::vector<Polynomial> a;

  static Potential zero(Signature sig) {
    return Potential{std::vector<Polynomial>(sig.n() + 1, Polynomial(sig.n() + 1))};
  }
  const Polynomial& operator[](int mu) const { return a.at(mu); }
  std::size_t size() const { return a.size(); }
};

/// Constant field with the given multivector value.
inline FieldMV embed(const ExactMV& u) {
  const int nvars = u.signature().n() + 1;
  return u.map_coeffs([&](Blade, const GaussRational& c) { return Polynomial::constant(nvars, c); });
}

inline FieldMV field_scalar_mul(const Polynomial& p, const FieldMV& u) {
  return u.map_coeffs([&](Blade, const Polynomial& c) { return p * c; });
}

inline FieldMV field_pderiv(const FieldMV& u, int index) {
  if (index < 0 || index > u.signature().n())
    throw Error(ErrorCode::IndexOutOfRange, "d/dx" + std::to_string(index));
  return u.map_coeffs([&](Blade, const Polynomial& c) {
    return index < c.nvars() ? c.pderiv(index) : Polynomial(c.nvars());
  });
}

inline FieldMV field_substitute(const FieldMV& u, const Matrix<Rational>& m) {
  return u.map_coeffs([&](Blade, const Polynomial& c) { return c.linear_substitute(m); });
}

inline ExactMV eval_at(const FieldMV& u, const std::vector<Rational>& point) {
  if (int(point.size()) != u.signature().n() + 1)
    throw Error(ErrorCode::LengthMismatch, "point has " + std::to_string(point.size()) +
                                               " entries, need " + std::to_string(u.signature().n() + 1));
  return u.map_coeffs([&](Blade, const Polynomial& c) { return c.eval(point); });
}

inline FloatMV eval_at(const FieldMV& u, const std::vector<double>& point) {
  if (int(point.size()) != u.signature().n() + 1)
    throw Error(ErrorCode::LengthMismatch, "point length");
  return u.map_coeffs([&](Blade, const Polynomial& c) { return c.eval(point); });
}

inline Polynomial substitute(const Polynomial& p, const Matrix<Rational>& m) {
  return p.linear_substitute(m);
}

inline Polynomial pderiv(const Polynomial& p, int index) { return p.pderiv(index); }

}  // namespace dhga
