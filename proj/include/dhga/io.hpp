#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dhga/error.hpp"
#include "dhga/linalg.hpp"
#include "dhga/multivector.hpp"
#include "dhga/polynomial.hpp"

namespace dhga {

using json = nlohmann::json;

/// Syntax error with the byte offset where parsing stopped and the tokens that would have
/// been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found)
      : Error(ErrorCode::ParseError, describe(position, expected, found)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string describe(std::size_t pos, const std::vector<std::string>& expected,
                              const std::string& found) {
    std::string s = "at position " + std::to_string(pos) + ": expected one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
    return s + "}, found " + found;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Next character without skipping whitespace (blade and index tokens are contiguous).
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, std::vector<std::string> expected) {
    if (!accept(c)) fail(std::move(expected));
  }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
      out += text_[pos_];
      ++pos_;
    }
    return out;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_space();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// rational := integer ("/" positive-integer)?   (cursor at a digit)
inline Rational parse_unsigned_rational(Cursor& cur) {
  std::string num = cur.digits();
  if (num.empty()) cur.fail({"integer"});
  if (cur.peek() == '/') {
    cur.accept('/');
    cur.skip_space();
    std::size_t at = cur.pos();
    std::string den = cur.digits();
    if (den.empty()) cur.fail({"positive-integer"});
    mpz_class d(den);
    if (d == 0) throw ParseError(at, {"positive-integer"}, "'0'");
    Rational q{mpz_class(num), d};
    q.canonicalize();
    return q;
  }
  return Rational(mpz_class(num));
}

/// coeff := rational | rational? "i" | "(" rational ("+"|"-") rational "i" ")"
/// Returns nullopt when the cursor is not at a coefficient.
inline std::optional<GaussRational> parse_coefficient(Cursor& cur) {
  char c = cur.peek();
  if (c == '(') {
    cur.accept('(');
    Rational sign = 1;
    if (cur.accept('-')) sign = -1;
    cur.skip_space();
    if (!is_digit(cur.peek_raw())) cur.fail({"rational"});
    Rational re = sign * parse_unsigned_rational(cur);
    Rational im_sign;
    if (cur.accept('+'))
      im_sign = 1;
    else if (cur.accept('-'))
      im_sign = -1;
    else
      cur.fail({"'+'", "'-'"});
    Rational im = 1;
    cur.skip_space();
    if (is_digit(cur.peek_raw())) im = parse_unsigned_rational(cur);
    cur.expect('i', {"'i'"});
    cur.expect(')', {"')'"});
    return GaussRational(re, im_sign * im);
  }
  if (is_digit(c)) {
    cur.skip_space();
    Rational q = parse_unsigned_rational(cur);
    if (cur.peek() == 'i') {
      cur.accept('i');
      return GaussRational(Rational(0), q);
    }
    return GaussRational(q);
  }
  if (c == 'i') {
    cur.accept('i');
    return GaussRational(Rational(0), Rational(1));
  }
  return std::nullopt;
}

/// blade := "e" | "e" index+ | "e" index ("." index)+ ; returns generator indices in the
/// written order.
inline std::vector<int> parse_blade_indices(Cursor& cur) {
  cur.expect('e', {"'e'"});
  std::vector<int> idx;
  if (!is_digit(cur.peek_raw())) return idx;
  std::string first = cur.digits();
  if (cur.peek_raw() == '.') {
    idx.push_back(std::stoi(first));
    while (cur.peek_raw() == '.') {
      cur.advance();
      std::string d = cur.digits();
      if (d.empty()) cur.fail({"index"});
      idx.push_back(std::stoi(d));
    }
  } else {
    for (char ch : first) idx.push_back(ch - '0');
  }
  if (cur.peek_raw() == 'e' || std::isalpha(static_cast<unsigned char>(cur.peek_raw())))
    cur.fail({"'+'", "'-'", "end of input"});
  return idx;
}

template <class C>
Multivector<C> blade_product(Signature sig, const std::vector<int>& idx, std::size_t at) {
  Multivector<C> out = Multivector<C>::one(sig);
  for (int i : idx) {
    if (i > sig.n())
      throw ParseError(at, {"index <= " + std::to_string(sig.n())}, "index " + std::to_string(i));
    out = out * Multivector<C>::generator(sig, i);
  }
  return out;
}

}  // namespace detail

/// Parses the multivector text grammar. Blade indices may be written in any order (the sign of
/// the reordering is applied); the first term may carry a leading sign.
inline ExactMV parse_mv(std::string_view text, Signature sig) {
  detail::Cursor cur(text);
  ExactMV out(sig);
  bool first = true;
  while (true) {
    int sign = 1;
    if (first) {
      if (cur.accept('-')) sign = -1;
      else cur.accept('+');
    } else {
      if (cur.accept('-')) sign = -1;
      else if (!cur.accept('+')) cur.fail({"'+'", "'-'", "end of input"});
    }
    first = false;
    auto coeff = detail::parse_coefficient(cur);
    std::size_t blade_at = cur.pos();
    ExactMV term = ExactMV::one(sig);
    bool star = coeff && cur.accept('*');
    if (cur.peek() == 'e') {
      cur.skip_space();
      blade_at = cur.pos();
      term = detail::blade_product<GaussRational>(sig, detail::parse_blade_indices(cur), blade_at);
    } else if (!coeff || star) {
      cur.fail(coeff ? std::vector<std::string>{"blade"}
                     : std::vector<std::string>{"rational", "'i'", "'('", "blade"});
    }
    GaussRational c = coeff.value_or(GaussRational(1));
    if (sign < 0) c = GaussRational(-c.re, -c.im);
    out += scale(term, c);
    if (cur.at_end()) break;
  }
  return out;
}

/// Prints a multivector in the grammar accepted by parse_mv (exact backend) or with decimal
/// coefficients (float backend).
template <class C>
std::string format_mv(const Multivector<C>& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : u.terms()) {
    bool is_id = b == Blade::identity();
    bool neg;
    std::string mag;
    if constexpr (std::is_same_v<C, GaussRational>) {
      std::tie(neg, mag) = detail::coefficient_text(c, !is_id);
    } else if constexpr (std::is_same_v<C, Polynomial>) {
      neg = false;
      mag = "(" + c.to_string() + ")";
    } else {
      std::ostringstream os;
      os.precision(17);
      neg = false;
      if (c.imag() == 0.0) {
        neg = c.real() < 0;
        os << std::abs(c.real());
      } else if (c.real() == 0.0) {
        neg = c.imag() < 0;
        os << std::abs(c.imag()) << "i";
      } else {
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
      }
      mag = os.str();
    }
    if (neg && mag.front() == '(') neg = false;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (is_id)
      out += mag;
    else if (mag.empty())
      out += b.to_string();
    else
      out += mag + "*" + b.to_string();
  }
  return out;
}

template <class C>
std::ostream& operator<<(std::ostream& os, const Multivector<C>& u) {
  return os << format_mv(u);
}

/// PolyScalar text: terms "coeff*x0^2*x1" joined by + / -.
inline Polynomial parse_poly(std::string_view text, int nvars) {
  detail::Cursor cur(text);
  Polynomial out(nvars);
  bool first = true;
  while (true) {
    int sign = 1;
    if (cur.accept('-')) sign = -1;
    else if (!cur.accept('+') && !first) cur.fail({"'+'", "'-'", "end of input"});
    first = false;
    auto coeff = detail::parse_coefficient(cur);
    std::vector<int> exps(kMaxVars, 0);
    bool any_var = false;
    bool need_var = coeff && cur.accept('*');
    while (cur.peek() == 'x') {
      cur.accept('x');
      std::string d = cur.digits();
      if (d.empty()) cur.fail({"variable index"});
      int v = std::stoi(d);
      if (v >= nvars) cur.fail({"variable index < " + std::to_string(nvars)});
      int e = 1;
      if (cur.accept('^')) {
        cur.skip_space();
        std::string de = cur.digits();
        if (de.empty()) cur.fail({"exponent"});
        e = std::stoi(de);
      }
      exps[v] += e;
      any_var = true;
      if (!cur.accept('*')) break;
      if (cur.peek() != 'x') cur.fail({"'x'"});
    }
    if ((need_var && !any_var) || (!coeff && !any_var)) cur.fail({"rational", "'i'", "'('", "'x'"});
    GaussRational c = coeff.value_or(GaussRational(1));
    if (sign < 0) c = GaussRational(-c.re, -c.im);
    exps.resize(nvars);
    out += Polynomial::monomial(nvars, Monomial::from_exponents(exps), c);
    if (cur.at_end()) break;
  }
  return out;
}

// ---- JSON ----

inline json rational_json(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected rational string, got " + j.dump());
}

template <class C>
json mv_to_json(const Multivector<C>& u) {
  json terms = json::array();
  for (const auto& [b, c] : u.terms()) {
    json t;
    t["blade"] = b.indices();
    if constexpr (std::is_same_v<C, GaussRational>) {
      t["re"] = rational_json(c.re);
      t["im"] = rational_json(c.im);
    } else {
      t["re"] = c.real();
      t["im"] = c.imag();
    }
    terms.push_back(std::move(t));
  }
  return json{{"sig", u.signature().n()}, {"terms", std::move(terms)}};
}

inline ExactMV mv_from_json(const json& j) {
  try {
    Signature sig(j.at("sig").get<int>());
    ExactMV out(sig);
    for (const auto& t : j.at("terms")) {
      std::vector<int> idx = t.at("blade").get<std::vector<int>>();
      GaussRational c(rational_from_json(t.at("re")),
                      t.contains("im") ? rational_from_json(t.at("im")) : Rational(0));
      out += scale(detail::blade_product<GaussRational>(sig, idx, 0), c);
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("multivector JSON: ") + e.what());
  }
}

inline json matrix_to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"n", int(m.rows()) - 1}, {"rows", std::move(rows)}};
}

inline json matrix_to_json(const Matrix<double>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return json{{"n", int(m.rows()) - 1}, {"mode", "float"}, {"rows", std::move(rows)}};
}

inline bool matrix_json_is_float(const json& j) {
  return j.contains("mode") && j.at("mode") == "float";
}

namespace detail {

template <class T, class F>
Matrix<T> matrix_from_json(const json& j, F&& entry) {
  try {
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("rows");
    const std::size_t dim = std::size_t(n) + 1;
    if (n < 0 || rows.size() != dim) throw Error(ErrorCode::LengthMismatch, "matrix JSON needs n+1 rows");
    Matrix<T> m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (rows[r].size() != dim) throw Error(ErrorCode::LengthMismatch, "matrix JSON row length");
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = entry(rows[r][c]);
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace detail

inline Matrix<Rational> matrix_from_json_exact(const json& j) {
  if (matrix_json_is_float(j)) throw Error(ErrorCode::ParseError, "float matrix given to exact backend");
  return detail::matrix_from_json<Rational>(j, rational_from_json);
}

inline Matrix<double> matrix_from_json_float(const json& j) {
  return detail::matrix_from_json<double>(j, [](const json& x) {
    if (x.is_number()) return x.get<double>();
    return rational_from_json(x).get_d();
  });
}

inline json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> exps(p.nvars());
    for (int v = 0; v < p.nvars(); ++v) exps[v] = mono.exponent(v);
    terms.push_back({{"exponents", exps}, {"re", rational_json(c.re)}, {"im", rational_json(c.im)}});
  }
  return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline Polynomial poly_from_json(const json& j) {
  try {
    const int nvars = j.at("nvars").get<int>();
    Polynomial out(nvars);
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exponents").get<std::vector<int>>();
      if (int(exps.size()) != nvars) throw Error(ErrorCode::LengthMismatch, "exponent vector length");
      out += Polynomial::monomial(nvars, Monomial::from_exponents(exps),
                                  GaussRational(rational_from_json(t.at("re")), rational_from_json(t.at("im"))));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace dhga
