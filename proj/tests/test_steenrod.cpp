#include <doctest.h>

#include <random>

#include "hitcalc/algebra.hpp"
#include "hitcalc/steenrod.hpp"
#include "oracles.hpp"

using namespace hitcalc;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Polynomial sq(Exponent i, const Polynomial& p) {
  return sq_poly(SquareIndex{i}, p);
}

}  // namespace

TEST_CASE("binomial parity matches Pascal's triangle") {
  for (std::uint64_t n = 0; n <= 80; ++n)
    for (std::uint64_t r = 0; r <= n + 2; ++r)
      CHECK(binomial_is_odd(n, r) == oracle::pascal_odd(n, r));
}

TEST_CASE("sq_mono examples") {
  CHECK(sq_mono(SquareIndex{4}, Monomial{7, 0, 0, 0, 0}) ==
        P("(11,0,0,0,0)"));
  CHECK(sq_mono(SquareIndex{1}, Monomial{7, 1, 1, 1}) ==
        P("(8,1,1,1)+(7,2,1,1)+(7,1,2,1)+(7,1,1,2)"));
  const Monomial m{4, 3, 2, 1, 1};
  CHECK(sq_mono(SquareIndex{0}, m) == Polynomial(m));
  CHECK(sq_mono(SquareIndex{12}, Monomial{7, 3, 1, 0, 0}).is_zero());
}

TEST_CASE("sq_poly examples") {
  CHECK(sq(1, P("(7,1,1,1)+(7,1,1,1)")).is_zero());
  CHECK(P("(5,5,1,0,0)") ==
        P("(6,4,1,0,0)+(6,3,2,0,0)+(5,4,2,0,0)") + sq(2, P("(5,3,1,0,0)")));
  CHECK(sq(4, P("(4,2,1,0,0)")) == P("(8,2,1,0,0)"));
}

TEST_CASE("sq_mono agrees with the total-square oracle") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (Exponent d = 0; d <= 7; ++d)
      for (const auto& m : enumerate_monomials(k, d))
        for (Exponent i = 0; i <= d + 1; ++i)
          CHECK(sq_mono(SquareIndex{i}, m) == oracle::total_square(i, m));
}

TEST_CASE("property: instability") {
  for (std::size_t k = 1; k <= 4; ++k)
    for (Exponent d = 0; d <= 8; ++d)
      for (const auto& m : enumerate_monomials(k, d)) {
        CHECK(sq_mono(SquareIndex{d + 1}, m).is_zero());
        CHECK(sq_mono(SquareIndex{d + 5}, m).is_zero());
        std::vector<Exponent> doubled(m.exponents().begin(), m.exponents().end());
        for (auto& e : doubled) e *= 2;
        CHECK(sq_mono(SquareIndex{d}, m) == Polynomial(Monomial(doubled)));
      }
}

TEST_CASE("property: Cartan formula") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = oracle::random_polynomial(rng, 3, 4, 3);
    const auto q = oracle::random_polynomial(rng, 3, 4, 3);
    std::uniform_int_distribution<Exponent> pick(0, 9);
    const Exponent n = pick(rng);
    Polynomial rhs(3);
    for (Exponent i = 0; i <= n; ++i) rhs += sq(i, p) * sq(n - i, q);
    CHECK(sq(n, p * q) == rhs);
  }
}

TEST_CASE("property: naturality under linear substitution") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = oracle::random_invertible(rng, 4);
    const auto p = oracle::random_polynomial(rng, 4, 3, 3);
    std::uniform_int_distribution<Exponent> pick(1, 6);
    const Exponent i = pick(rng);
    CHECK(substitute(sq(i, p), g) == sq(i, substitute(p, g)));
  }
  // Also for singular substitutions.
  const LinearSubstitution proj(std::vector<std::uint64_t>{0b011, 0b011, 0b100});
  const auto p = P("(3,2,1)+(1,1,4)");
  for (Exponent i = 0; i <= 7; ++i)
    CHECK(substitute(sq(i, p), proj) == sq(i, substitute(p, proj)));
}

TEST_CASE("one variable: spikes never appear in a positive square") {
  for (unsigned n = 1; n <= 6; ++n) {
    const Exponent spike = (Exponent{1} << n) - 1;
    for (Exponent a = 0; a < spike; ++a)
      for (Exponent i = 1; a + i <= spike; ++i)
        CHECK_FALSE(sq_mono(SquareIndex{i}, Monomial{a}).contains(Monomial{spike}));
  }
}

TEST_CASE("sq_poly output is homogeneous") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_homogeneous(rng, 4, 6, 0.3);
    for (Exponent i = 0; i <= 7; ++i) {
      const auto s = sq(i, p);
      CHECK((s.is_zero() || s.is_homogeneous_of(6 + i)));
    }
  }
}
