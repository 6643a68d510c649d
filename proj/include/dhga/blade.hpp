#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dhga/error.hpp"

namespace dhga {

/// Largest supported n; the algebra Cl(1,n) then has dimension 2^(n+1) = 256.
inline constexpr int kMaxN = 7;

/// Metric signature (1,n): generator 0 squares to +1, generators 1..n square to -1.
class Signature {
 public:
  constexpr Signature() = default;
  explicit Signature(int n) : n_(n) {
    if (n < 0 || n > kMaxN)
      throw Error(ErrorCode::DimensionTooLarge,
                  "n=" + std::to_string(n) + " outside 0.." + std::to_string(kMaxN));
  }

  constexpr int n() const { return n_; }
  constexpr int generator_count() const { return n_ + 1; }
  constexpr std::size_t dimension() const { return std::size_t{1} << (n_ + 1); }
  constexpr std::uint32_t full_mask() const { return (std::uint32_t{1} << (n_ + 1)) - 1; }

  /// Diagonal metric entry for generator `index`.
  constexpr int metric(int index) const { return index == 0 ? 1 : -1; }

  friend constexpr bool operator==(Signature, Signature) = default;

 private:
  int n_ = 0;
};

/// Basis monomial e^{mu_1...mu_k}, mu_1 < ... < mu_k, stored as an index bitmask.
struct Blade {
  std::uint32_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t m) : mask(m) {}

  static Blade identity() { return Blade(0); }
  static Blade generator(int index) { return Blade(std::uint32_t{1} << index); }
  static Blade from_indices(const std::vector<int>& ascending) {
    std::uint32_t m = 0;
    int prev = -1;
    for (int idx : ascending) {
      if (idx <= prev || idx < 0 || idx > kMaxN)
        throw Error(ErrorCode::InvalidBlade, "indices must be strictly ascending in 0..7");
      m |= std::uint32_t{1} << idx;
      prev = idx;
    }
    return Blade(m);
  }

  constexpr int grade() const { return std::popcount(mask); }
  constexpr bool contains(int index) const { return (mask >> index) & 1U; }
  bool valid_for(Signature sig) const { return (mask & ~sig.full_mask()) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// Canonical order: by grade, then lexicographically by ascending index list.
  friend constexpr std::strong_ordering operator<=>(Blade a, Blade b) {
    if (auto c = a.grade() <=> b.grade(); c != 0) return c;
    std::uint32_t x = a.mask;
    std::uint32_t y = b.mask;
    while (x != 0 && y != 0) {
      int ix = std::countr_zero(x);
      int iy = std::countr_zero(y);
      if (ix != iy) return ix <=> iy;
      x &= x - 1;
      y &= y - 1;
    }
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(Blade a, Blade b) { return a.mask == b.mask; }

  /// "e", "e012", or dotted "e0.1.12" form (the latter is never needed for n <= 7).
  std::string to_string() const {
    std::string s = "e";
    auto idx = indices();
    bool dotted = false;
    for (int i : idx) dotted = dotted || i >= 10;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (dotted && k > 0) s += '.';
      s += std::to_string(idx[k]);
    }
    return s;
  }
};

struct SignedBlade {
  int sign = 1;
  Blade blade;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Number of transpositions needed to bring the concatenation (a, b) into ascending order.
constexpr int reorder_swaps(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  return swaps;
}

/// Geometric product of two basis blades: reordering parity times the metric of the
/// contracted indices.
inline SignedBlade blade_mul(Blade a, Blade b, [[maybe_unused]] Signature sig) {
  int negatives = reorder_swaps(a.mask, b.mask);
  // index 0 has metric +1, every other repeated index contributes -1
  std::uint32_t common = a.mask & b.mask;
  negatives += std::popcount(common & ~std::uint32_t{1});
  return {(negatives & 1) ? -1 : 1, Blade(a.mask ^ b.mask)};
}

/// (-1)^(k(k-1)/2)
constexpr int reversion_sign(int grade) { return ((grade / 2) % 2 == 0) ? 1 : -1; }

/// (-1)^k
constexpr int grade_involution_sign(int grade) { return (grade % 2 == 0) ? 1 : -1; }

}  // namespace dhga
