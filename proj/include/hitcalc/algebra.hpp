#pragma once

// Monomials and polynomials over F2 in a fixed number of variables.
//
// Text syntax (shared by the CLI, the certificate format and the identity
// ledger): a monomial is "(a1,a2,...,ak)" with decimal exponents, a
// polynomial is monomials joined by "+", and the zero polynomial is "0".
// Whitespace is ignored on input; output never contains any.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hitcalc {

using Exponent = std::uint64_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents)
      : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  static Monomial one(std::size_t arity) {
    return Monomial(std::vector<Exponent>(arity, 0));
  }

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  // Throws ErrorCode::overflow if the sum does not fit in an Exponent.
  Exponent degree() const;

  // Every exponent has the form 2^n - 1 (zero included).
  bool is_spike() const noexcept;

  // Exponentwise sum; arity must agree.
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&,
                                          const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

// Global monomial order: descending lexicographic on exponent tuples.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// A finite set of monomials of one arity; addition is symmetric difference.
// Terms are kept sorted in the global monomial order.
class Polynomial {
 public:
  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}
  Polynomial(const Monomial& m);  // NOLINT(google-explicit-constructor)

  // Terms occurring an even number of times cancel.
  static Polynomial from_terms(std::size_t arity, std::vector<Monomial> terms);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const Monomial> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool contains(const Monomial& m) const;

  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous() const;
  bool is_homogeneous_of(Exponent degree) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<Monomial> terms_;
};

// All exponent tuples of length k summing to d, in descending lex order.
std::vector<Monomial> enumerate_monomials(std::size_t k, Exponent d);

// x_i -> sum_j row(i)_j x_j over F2, with rows stored as bitmasks (k <= 64).
class LinearSubstitution {
 public:
  LinearSubstitution() = default;
  explicit LinearSubstitution(std::vector<std::uint64_t> rows);

  static LinearSubstitution identity(std::size_t k);
  // Swaps x_i and x_j.
  static LinearSubstitution transposition(std::size_t k, std::size_t i,
                                          std::size_t j);
  // x_target -> x_target + x_source, other variables fixed.
  static LinearSubstitution transvection(std::size_t k, std::size_t target,
                                         std::size_t source);
  // Parses e.g. "x->x+z; y->y+z" (letters x,y,z,t,u for k <= 5) or
  // "x1->x1+x3". Unmentioned variables are fixed.
  static LinearSubstitution parse(std::size_t k, std::string_view text);

  std::size_t arity() const noexcept { return rows_.size(); }
  std::uint64_t row(std::size_t i) const { return rows_[i]; }
  bool entry(std::size_t i, std::size_t j) const {
    return (rows_[i] >> j) & 1u;
  }
  bool is_invertible() const;

  // Substituting by *this and then by `next` equals substituting by the
  // returned matrix, which is the product (*this) * next.
  LinearSubstitution then(const LinearSubstitution& next) const;

  friend bool operator==(const LinearSubstitution&,
                         const LinearSubstitution&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

Polynomial substitute(const Polynomial& p, const LinearSubstitution& g);

// Drops every term with a positive exponent on a killed variable and
// re-indexes the survivors into arity k - |kill|.
Polynomial project(const Polynomial& p, std::span<const std::size_t> kill);

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);

Monomial parse_monomial(std::string_view text);
// `arity` is required to parse "0"; otherwise it is checked if given.
Polynomial parse_polynomial(std::string_view text,
                            std::optional<std::size_t> arity = std::nullopt);

// Name used in reports: x,y,z,t,u when k <= 5, else x1..xk.
std::string variable_name(std::size_t k, std::size_t i);

}  // namespace hitcalc
