#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dhga/blade.hpp"
#include "dhga/error.hpp"

namespace dhga {

/// Solution type of the Dirac-Hestenes equation: spinor for odd n = 2d-1, semi-spinor or
/// double spinor for even n = 2d.
enum class SpinorKind { Spinor, SemiSpinor, DoubleSpinor };

constexpr std::string_view to_string(SpinorKind kind) {
  switch (kind) {
    case SpinorKind::Spinor: return "spinor";
    case SpinorKind::SemiSpinor: return "semispinor";
    case SpinorKind::DoubleSpinor: return "doublespinor";
  }
  return "unknown";
}

inline SpinorKind parse_spinor_kind(std::string_view text) {
  if (text == "spinor") return SpinorKind::Spinor;
  if (text == "semispinor") return SpinorKind::SemiSpinor;
  if (text == "doublespinor") return SpinorKind::DoubleSpinor;
  throw Error(ErrorCode::InvalidSpec, "unknown spinor kind '" + std::string(text) + "'");
}

/// Checks that n has the parity the kind requires and is large enough for the construction
/// (n >= 3 for spinors, n >= 4 otherwise). Returns d.
inline int spinor_half_dimension(int n, SpinorKind kind) {
  if (n > kMaxN)
    throw Error(ErrorCode::DimensionTooLarge, "n=" + std::to_string(n) + " exceeds cap");
  bool odd = n % 2 == 1;
  if (kind == SpinorKind::Spinor) {
    if (!odd || n < 3)
      throw Error(ErrorCode::InvalidSpec, "spinor kind needs odd n >= 3, got " + std::to_string(n));
    return (n + 1) / 2;
  }
  if (odd || n < 4)
    throw Error(ErrorCode::InvalidSpec,
                std::string(to_string(kind)) + " kind needs even n >= 4, got " + std::to_string(n));
  return n / 2;
}

/// The subalgebra Q' = Cl(e0, e1, e2, e3, e5, ..., e^{2d-1} [, e^{2d}]) that houses the
/// Dirac-Hestenes wave function.
struct QPrimeSpec {
  int n = 3;
  SpinorKind kind = SpinorKind::Spinor;
  std::vector<int> generators;

  static QPrimeSpec make(int n, SpinorKind kind) {
    int d = spinor_half_dimension(n, kind);
    QPrimeSpec q{n, kind, {0, 1, 2}};
    for (int odd = 3; odd <= 2 * d - 1; odd += 2) q.generators.push_back(odd);
    if (kind == SpinorKind::DoubleSpinor) q.generators.push_back(2 * d);
    return q;
  }

  std::uint32_t mask() const {
    std::uint32_t m = 0;
    for (int g : generators) m |= std::uint32_t{1} << g;
    return m;
  }

  /// Generators of Cl(1,n) outside Q' (always even indices 4, 6, ...).
  std::vector<int> complement() const {
    std::vector<int> out;
    std::uint32_t m = mask();
    for (int i = 0; i <= n; ++i)
      if (!((m >> i) & 1U)) out.push_back(i);
    return out;
  }

  std::uint32_t complement_mask() const {
    return ((std::uint32_t{1} << (n + 1)) - 1) & ~mask();
  }

  /// Basis blades of Q'^(0), in canonical order.
  std::vector<Blade> even_basis() const {
    std::vector<Blade> out;
    std::uint32_t m = mask();
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << (n + 1)); ++sub)
      if ((sub & ~m) == 0 && Blade(sub).grade() % 2 == 0) out.push_back(Blade(sub));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t even_dimension() const { return std::size_t{1} << (generators.size() - 1); }
};

}  // namespace dhga
