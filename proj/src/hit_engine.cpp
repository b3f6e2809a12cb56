#include "hitcalc/hit_engine.hpp"

#include <limits>
#include <map>

#include "hitcalc/error.hpp"
#include "parallel.hpp"

namespace hitcalc {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// C(d + k - 1, k - 1), saturating at `limit + 1`.
std::size_t monomial_count(std::size_t k, Exponent d, std::size_t limit) {
  // C(n, r) built incrementally; each step stays an integer.
  unsigned __int128 c = 1;
  for (std::size_t r = 1; r < k; ++r) {
    c = c * (d + r) / r;
    if (c > limit) return limit + 1;
  }
  return static_cast<std::size_t>(c);
}

HitMatrix build_hit_matrix(std::size_t k, Exponent d, bool powers_only) {
  auto basis = std::make_shared<const MonomialBasis>(k, d);
  std::vector<GeneratorEntry> log;
  for (Exponent i = 1; i <= d; i = powers_only ? i * 2 : i + 1) {
    for (auto& m : enumerate_monomials(k, d - i))
      log.push_back({SquareIndex(i), std::move(m)});
  }
  std::vector<BitVector> rows(log.size());
  detail::parallel_for(log.size(), [&](std::size_t r) {
    rows[r] = basis->coordinates(sq_mono(log[r].square, log[r].source));
  });
  HitMatrix h{basis, F2Matrix::from_rows(basis->size(), std::move(rows)),
              std::move(log)};
  return h;
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t k, Exponent d) : k_(k), d_(d) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be positive");
  if (monomial_count(k, d, max_cohit_columns) > max_cohit_columns)
    throw Error(ErrorCode::invalid_argument,
                "degree " + std::to_string(d) + " in " + std::to_string(k) +
                    " variables exceeds the supported monomial count");
  monomials_ = enumerate_monomials(k, d);
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw Error(ErrorCode::degree_mismatch,
                to_string(m) + " is not a monomial of degree " +
                    std::to_string(d_) + " in " + std::to_string(k_) +
                    " variables");
  return it->second;
}

BitVector MonomialBasis::coordinates(const Polynomial& p) const {
  if (p.arity() != k_)
    throw Error(ErrorCode::arity_mismatch,
                "expected " + std::to_string(k_) + " variables, got " +
                    std::to_string(p.arity()));
  BitVector v(monomials_.size());
  for (const auto& m : p.terms()) v.flip(index_of(m));
  return v;
}

Polynomial MonomialBasis::polynomial(const BitVector& coords) const {
  std::vector<Monomial> terms;
  for (std::size_t i = coords.find_next(0); i < coords.size();
       i = coords.find_next(i + 1))
    terms.push_back(monomials_.at(i));
  return Polynomial::from_terms(k_, std::move(terms));
}

HitMatrix hit_matrix(std::size_t k, Exponent d) {
  return build_hit_matrix(k, d, true);
}

HitMatrix hit_matrix_all_squares(std::size_t k, Exponent d) {
  return build_hit_matrix(k, d, false);
}

CohitSpace::CohitSpace(std::size_t k, Exponent d) {
  HitMatrix h = hit_matrix(k, d);
  basis_ = std::move(h.basis);
  log_ = std::move(h.generator_log);
  hit_ = rref(h.matrix, true);
  column_to_basis_.assign(basis_->size(), npos);
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < basis_->size(); ++c) {
    if (next_pivot < hit_.pivots.size() && hit_.pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    column_to_basis_[c] = basis_columns_.size();
    basis_columns_.push_back(c);
  }
}

std::vector<Monomial> CohitSpace::basis_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_columns_.size());
  for (auto c : basis_columns_) out.push_back((*basis_)[c]);
  return out;
}

const Monomial& CohitSpace::basis_monomial(std::size_t j) const {
  return (*basis_)[basis_columns_.at(j)];
}

BitVector CohitSpace::reduce(const Polynomial& p) const {
  BitVector v = basis_->coordinates(p);
  hit_.reduce(v);
  BitVector cls(dim());
  for (std::size_t c = v.find_next(0); c < v.size(); c = v.find_next(c + 1))
    cls.set(column_to_basis_[c]);
  return cls;
}

Polynomial CohitSpace::representative(const BitVector& cls) const {
  if (cls.size() != dim())
    throw Error(ErrorCode::invalid_argument, "class vector has wrong length");
  std::vector<Monomial> terms;
  for (std::size_t j = cls.find_next(0); j < cls.size();
       j = cls.find_next(j + 1))
    terms.push_back(basis_monomial(j));
  return Polynomial::from_terms(vars(), std::move(terms));
}

HitCertificate CohitSpace::certificate(const Polynomial& p) const {
  BitVector v = basis_->coordinates(p);
  BitVector combo(log_.size());
  hit_.reduce(v, &combo);

  HitCertificate c;
  c.vars = vars();
  c.degree = degree();
  c.target = p;
  c.residue = basis_->polynomial(v);

  std::map<Exponent, std::vector<Monomial>> by_square;
  for (std::size_t r = combo.find_next(0); r < combo.size();
       r = combo.find_next(r + 1))
    by_square[log_[r].square.value].push_back(log_[r].source);
  for (auto& [i, sources] : by_square)
    c.summands.push_back(
        {SquareIndex(i), Polynomial::from_terms(vars(), std::move(sources))});
  return c;
}

}  // namespace hitcalc
