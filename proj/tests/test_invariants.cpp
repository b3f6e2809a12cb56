#include <doctest.h>

#include <algorithm>
#include <random>

#include <json.hpp>

#include "hitcalc/error.hpp"
#include "hitcalc/invariants.hpp"
#include "oracles.hpp"

using namespace hitcalc;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<LinearSubstitution> all_transvections(std::size_t k) {
  std::vector<LinearSubstitution> out;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) out.push_back(LinearSubstitution::transvection(k, i, j));
  return out;
}

// All v with A_g v = v for every generator, by enumeration.
std::size_t brute_force_invariant_count(const CohitSpace& s,
                                        const std::vector<LinearSubstitution>& gens) {
  std::vector<F2Matrix> actions;
  for (const auto& g : gens) actions.push_back(action_matrix(g, s));
  std::size_t fixed = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.dim()); ++bits) {
    BitVector v(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) v.set(i, (bits >> i) & 1u);
    bool ok = true;
    for (const auto& a : actions) ok = ok && a.apply(v) == v;
    fixed += ok;
  }
  return fixed;
}

}  // namespace

TEST_CASE("generators") {
  const auto two = gl_generators(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == LinearSubstitution::transposition(2, 0, 1));
  CHECK(two[1] == LinearSubstitution::transvection(2, 0, 1));
  CHECK(gl_generators(1).empty());
  const auto five = gl_generators(5);
  CHECK(five.size() == 5);
  for (const auto& g : five) CHECK(g.is_invertible());
  CHECK(sym_generators(5).size() == 4);
  CHECK_THROWS_AS(GroupSpec::custom({LinearSubstitution(
                      std::vector<std::uint64_t>{0b11, 0b11})}),
                  Error);
}

TEST_CASE("gl generators generate GL_3(F2)") {
  // Closure of the generators under composition has 168 elements.
  const auto gens = gl_generators(3);
  std::vector<LinearSubstitution> seen{LinearSubstitution::identity(3)};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& g : gens) {
      auto h = seen[i].then(g);
      if (std::find(seen.begin(), seen.end(), h) == seen.end())
        seen.push_back(std::move(h));
    }
  CHECK(seen.size() == 168);
}

TEST_CASE("action matrices") {
  const CohitSpace s(3, 7);
  CHECK(action_matrix(LinearSubstitution::identity(3), s) ==
        F2Matrix::identity(s.dim()));
  for (const auto& g : gl_generators(3))
    CHECK(rank(action_matrix(g, s)) == s.dim());

  const auto w = LinearSubstitution::transvection(3, 0, 1);
  const auto a = action_matrix(w, s);
  CHECK(a * a == action_matrix(w.then(w), s));

  // Substituting by g then h acts as A_h * A_g.
  std::mt19937_64 rng(51);
  for (int t = 0; t < 10; ++t) {
    const auto g = oracle::random_invertible(rng, 3);
    const auto h = oracle::random_invertible(rng, 3);
    CHECK(action_matrix(g.then(h), s) == action_matrix(h, s) * action_matrix(g, s));
  }
  CHECK_THROWS_AS(action_matrix(LinearSubstitution::identity(4), s), Error);
}

TEST_CASE("fixed space of the identity is everything") {
  const CohitSpace s(3, 7);
  CHECK(fixed_space(LinearSubstitution::identity(3), s).dim() == s.dim());
}

TEST_CASE("invariant subspace examples") {
  const auto r = invariant_subspace(5, 11, GroupSpec::general_linear(5));
  CHECK(r.cohit_dim == 315);
  CHECK(r.invariant_dim == 0);
  CHECK(r.invariant_basis.empty());
  CHECK(r.per_generator_fixed_dims.size() == 5);

  const auto one = invariant_subspace(1, 3, GroupSpec::general_linear(1));
  CHECK(one.invariant_dim == 1);
  REQUIRE(one.invariant_basis.size() == 1);
  CHECK(one.invariant_basis[0] == P("(3)"));

  const CohitSpace s22(2, 2);
  const auto two = invariant_subspace(s22, GroupSpec::general_linear(2));
  CHECK(two.invariant_dim == 1);
  CHECK(brute_force_invariant_count(s22, gl_generators(2)) == 2);
}

TEST_CASE("invariant dims agree with brute force on small spaces") {
  for (std::size_t k = 2; k <= 3; ++k)
    for (Exponent d = 1; d <= 9; ++d) {
      const CohitSpace s(k, d);
      if (s.dim() > 16) continue;
      for (const auto& spec : {GroupSpec::general_linear(k), GroupSpec::symmetric(k)}) {
        const auto r = invariant_subspace(s, spec);
        CHECK(brute_force_invariant_count(s, spec.generators) ==
              (std::size_t{1} << r.invariant_dim));
      }
    }
}

TEST_CASE("report invariants") {
  for (std::size_t k = 2; k <= 4; ++k)
    for (Exponent d = 1; d <= 8; ++d) {
      const CohitSpace s(k, d);
      const auto gl = invariant_subspace(s, GroupSpec::general_linear(k));
      const auto sym = invariant_subspace(s, GroupSpec::symmetric(k));
      CHECK(gl.invariant_dim <= sym.invariant_dim);
      for (auto n : gl.per_generator_fixed_dims) CHECK(gl.invariant_dim <= n);
      for (const auto& p : gl.invariant_basis)
        for (const auto& g : gl_generators(k))
          CHECK(s.is_hit(substitute(p, g) + p));
    }
}

TEST_CASE("invariants do not depend on the generating set") {
  const std::pair<std::size_t, Exponent> sizes[] = {{3, 7}, {4, 9}, {5, 11}};
  std::mt19937_64 rng(52);
  for (const auto& [k, d] : sizes) {
    const CohitSpace s(k, d);
    const auto base = invariant_subspace(s, GroupSpec::general_linear(k));

    auto gens = gl_generators(k);
    for (const auto& t : all_transvections(k)) gens.push_back(t);
    const auto redundant = invariant_subspace(s, GroupSpec::custom(gens));
    CHECK(redundant.invariant_dim == base.invariant_dim);

    auto shuffled = gl_generators(k);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto again = invariant_subspace(s, GroupSpec::custom(shuffled));
    CHECK(again.invariant_dim == base.invariant_dim);
    CHECK(again.invariants.canonical().basis == base.invariants.canonical().basis);
  }
}

TEST_CASE("invariant representatives are fixed by random group words") {
  std::mt19937_64 rng(53);
  std::size_t nonempty = 0;
  for (std::size_t k = 2; k <= 4; ++k)
    for (Exponent d = 1; d <= 10; ++d) {
      const CohitSpace s(k, d);
      const auto r = invariant_subspace(s, GroupSpec::general_linear(k));
      if (r.invariant_basis.empty()) continue;
      ++nonempty;
      const auto gens = gl_generators(k);
      std::uniform_int_distribution<std::size_t> len(1, 6);
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      for (int t = 0; t < 20; ++t) {
        auto word = LinearSubstitution::identity(k);
        for (std::size_t n = len(rng); n > 0; --n) word = word.then(gens[pick(rng)]);
        for (const auto& p : r.invariant_basis)
          CHECK(s.is_hit(substitute(p, word) + p));
      }
    }
  CHECK(nonempty > 0);
}

TEST_CASE("relations in three and four variables") {
  const CohitSpace s3(3, 11);
  CHECK(s3.is_hit(P("(5,3,3)+(3,5,3)+(3,3,5)")));
  CHECK_FALSE(s3.is_hit(P("(3,3,5)")));
  const CohitSpace s4(4, 11);
  CHECK_FALSE(s4.is_hit(P("(0,3,5,3)")));
}

TEST_CASE("projection replay") {
  const std::vector<std::size_t> tu{3, 4};
  const std::vector<std::size_t> u{4};
  const auto replay =
      replay_projection_argument(5, 11, tu, GroupSpec::general_linear(5));
  CHECK(replay.vacuous());
  CHECK(replay.target_vars == 3);

  const CohitSpace s4(4, 11);
  CHECK(project_class(P("(7,2,1,1,0)"), u, s4) == s4.reduce(P("(7,2,1,1)")));
  CHECK_FALSE(project_class(P("(7,2,1,1,0)"), u, s4).is_zero());
  const CohitSpace s3(3, 11);
  CHECK(project_class(P("(5,3,3,0,0)"), tu, s3) == s3.reduce(P("(5,3,3)")));

  // Non-vacuous replay: S_3 invariants in (3,7) projected to (2,7).
  const std::vector<std::size_t> z{2};
  const auto sym = replay_projection_argument(3, 7, z, GroupSpec::symmetric(3));
  const CohitSpace s2(2, 7);
  for (const auto& img : sym.images) {
    CHECK(img.projected == project(img.source, z));
    CHECK(img.image == s2.reduce(img.projected));
  }
  CHECK_THROWS_AS(replay_projection_argument(
                      2, 3, std::vector<std::size_t>{0, 1}, GroupSpec::symmetric(2)),
                  Error);
}

TEST_CASE("JSON report") {
  const auto r = invariant_subspace(2, 2, GroupSpec::general_linear(2));
  const auto text = invariant_report_json(r);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["k"] == 2);
  CHECK(j["d"] == 2);
  CHECK(j["group"] == "gl");
  CHECK(j["invariant_dim"] == 1);
  CHECK(j["basis"].size() == 1);
  CHECK(text.find("\"k\"") < text.find("\"per_generator_fixed_dims\""));
  CHECK(text == invariant_report_json(
                    invariant_subspace(2, 2, GroupSpec::general_linear(2))));
}
