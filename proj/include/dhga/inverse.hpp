#pragma once

#include "dhga/linalg.hpp"
#include "dhga/multivector.hpp"

namespace dhga {

/// Matrix of v -> u*v in the blade basis indexed by mask.
template <class C>
Matrix<C> left_regular_matrix(const Multivector<C>& u) {
  Signature sig = u.signature();
  const std::size_t dim = sig.dimension();
  Matrix<C> m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Blade bc(static_cast<std::uint32_t>(col));
    for (const auto& [b, c] : u.terms()) {
      SignedBlade sb = blade_mul(b, bc, sig);
      if (sb.sign > 0)
        m(sb.blade.mask, col) += c;
      else
        m(sb.blade.mask, col) -= c;
    }
  }
  return m;
}

/// Two-sided inverse from the dense 2^(n+1) linear system u*v = e, followed by a check that
/// v*u = e as well.
template <class C>
Multivector<C> inverse(const Multivector<C>& u) {
  using traits = coeff_traits<C>;
  Signature sig = u.signature();
  std::vector<C> rhs(sig.dimension(), traits::zero());
  rhs[0] = traits::one();
  auto x = solve(left_regular_matrix(u), std::move(rhs));
  if (!x) throw Error(ErrorCode::NotInvertible, "left-regular matrix is singular");
  Multivector<C> v(sig);
  for (std::size_t m = 0; m < x->size(); ++m) v.add_term(Blade(static_cast<std::uint32_t>(m)), (*x)[m]);
  const auto e = Multivector<C>::one(sig);
  if (!(u * v == e) || !(v * u == e))
    throw Error(ErrorCode::NotInvertible, "one-sided inverse only");
  return v;
}

}  // namespace dhga
