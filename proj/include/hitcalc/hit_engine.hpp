#pragma once

// The hit subspace A+ P_k in degree d and the cohit quotient
// (F2 ⊗_A P_k)_d.
//
// Columns of every hit matrix are the degree-d monomials in the global
// (descending lex) order. Rows are coordinates of Sq^(2^j)(m) for every j
// with 2^j <= d and every monomial m of degree d - 2^j, ordered by square
// then by m. The Sq^(2^j) generate the Steenrod algebra, so this spans the
// same space as all Sq^i; hit_matrix_all_squares keeps the longer
// construction around as an oracle.

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "hitcalc/algebra.hpp"
#include "hitcalc/certificate.hpp"
#include "hitcalc/f2linalg.hpp"
#include "hitcalc/steenrod.hpp"

namespace hitcalc {

struct GeneratorEntry {
  SquareIndex square;
  Monomial source;
};

// Coordinates of degree-d polynomials in k variables.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t k, Exponent d);

  std::size_t vars() const noexcept { return k_; }
  Exponent degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::span<const Monomial> monomials() const noexcept { return monomials_; }

  std::size_t index_of(const Monomial& m) const;
  // Throws Error(arity_mismatch / degree_mismatch) for foreign input.
  BitVector coordinates(const Polynomial& p) const;
  Polynomial polynomial(const BitVector& coords) const;

 private:
  std::size_t k_;
  Exponent d_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

struct HitMatrix {
  std::shared_ptr<const MonomialBasis> basis;
  F2Matrix matrix;
  std::vector<GeneratorEntry> generator_log;  // one entry per row
};

HitMatrix hit_matrix(std::size_t k, Exponent d);
HitMatrix hit_matrix_all_squares(std::size_t k, Exponent d);

// Largest monomial count accepted for a single (k, d).
inline constexpr std::size_t max_cohit_columns = 200000;

// Immutable after construction; safe to share between threads.
class CohitSpace {
 public:
  CohitSpace(std::size_t k, Exponent d);

  std::size_t vars() const noexcept { return basis_->vars(); }
  Exponent degree() const noexcept { return basis_->degree(); }
  std::size_t dim() const noexcept { return basis_columns_.size(); }
  std::size_t hit_rank() const noexcept { return hit_.rank(); }

  const MonomialBasis& monomials() const noexcept { return *basis_; }
  // Quotient representatives: the non-pivot monomials, in global order.
  std::vector<Monomial> basis_monomials() const;
  const Monomial& basis_monomial(std::size_t j) const;
  const Echelon& hit_echelon() const noexcept { return hit_; }
  std::span<const GeneratorEntry> generator_log() const noexcept {
    return log_;
  }

  // Coordinates of the class of p in basis_monomials(). Requires p to be
  // homogeneous of degree d in k variables.
  BitVector reduce(const Polynomial& p) const;
  bool is_hit(const Polynomial& p) const { return reduce(p).is_zero(); }
  // Sum of the basis monomials selected by `cls`.
  Polynomial representative(const BitVector& cls) const;

  // Residue is the canonical representative of the class of p.
  HitCertificate certificate(const Polynomial& p) const;

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<GeneratorEntry> log_;
  Echelon hit_;
  std::vector<std::size_t> basis_columns_;
  std::vector<std::size_t> column_to_basis_;
};

}  // namespace hitcalc
