#include "hitcalc/steenrod.hpp"

#include <limits>
#include <vector>

#include "hitcalc/error.hpp"

namespace hitcalc {

Polynomial sq_mono(SquareIndex sq, const Monomial& m) {
  const std::size_t k = m.arity();
  const Exponent i = sq.value;
  if (i == 0) return Polynomial(m);
  const Exponent deg = m.degree();
  if (i > deg) return Polynomial(k);
  if (deg > std::numeric_limits<Exponent>::max() - i)
    throw Error(ErrorCode::overflow, "Sq^i result degree overflows");

  // suffix[j] = a_j + ... + a_{k-1}: the most the remaining variables can absorb.
  std::vector<Exponent> suffix(k + 1, 0);
  for (std::size_t j = k; j-- > 0;) suffix[j] = suffix[j + 1] + m[j];

  // Distinct compositions give distinct monomials, so nothing cancels here.
  std::vector<Monomial> terms;
  std::vector<Exponent> exps(m.exponents().begin(), m.exponents().end());
  auto rec = [&](auto&& self, std::size_t j, Exponent remaining) -> void {
    if (remaining > suffix[j]) return;
    if (j == k) {
      terms.emplace_back(exps);
      return;
    }
    const Exponent a = m[j];
    if (j + 1 == k) {
      if (!binomial_is_odd(a, remaining)) return;
      exps[j] = a + remaining;
      terms.emplace_back(exps);
      exps[j] = a;
      return;
    }
    // Enumerate the submasks s of a with s <= remaining (Lucas pruning).
    for (Exponent s = a;; s = (s - 1) & a) {
      if (s <= remaining) {
        exps[j] = a + s;
        self(self, j + 1, remaining - s);
        exps[j] = a;
      }
      if (s == 0) break;
    }
  };
  rec(rec, 0, i);
  return Polynomial::from_terms(k, std::move(terms));
}

Polynomial sq_poly(SquareIndex i, const Polynomial& p) {
  Polynomial result(p.arity());
  for (const auto& m : p.terms()) result += sq_mono(i, m);
  return result;
}

}  // namespace hitcalc
