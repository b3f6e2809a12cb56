#pragma once

// Action of the mod 2 Steenrod squares on F2[x1..xk].
//
// Sq^i(x1^a1 ... xk^ak) = sum over i = i1 + ... + ik of
//   prod C(aj, ij) xj^(aj + ij)   (mod 2),
// where C(a, b) is odd iff the binary digits of b are a subset of those of a.

#include "hitcalc/algebra.hpp"

namespace hitcalc {

// Superscript of Sq^i. Sq^0 is the identity.
struct SquareIndex {
  Exponent value = 0;

  constexpr SquareIndex() = default;
  constexpr explicit SquareIndex(Exponent i) : value(i) {}
  friend auto operator<=>(const SquareIndex&, const SquareIndex&) = default;
};

constexpr bool binomial_is_odd(Exponent a, Exponent b) noexcept {
  return b <= a && (b & ~a) == 0;
}

Polynomial sq_mono(SquareIndex i, const Monomial& m);
Polynomial sq_poly(SquareIndex i, const Polynomial& p);

}  // namespace hitcalc
