#pragma once

// GL_k(F2) acting on the cohit quotient by linear substitution, and the
// invariant subspace as the intersection of the fixed spaces ker(A_g - I)
// over a generating set.

#include <string>
#include <vector>

#include "hitcalc/algebra.hpp"
#include "hitcalc/f2linalg.hpp"
#include "hitcalc/hit_engine.hpp"

namespace hitcalc {

enum class GroupKind { general_linear, symmetric, custom };

std::string to_string(GroupKind kind);

// Adjacent transpositions (x_i x_{i+1}) followed by x1 -> x1 + x2.
// Empty for k = 1.
std::vector<LinearSubstitution> gl_generators(std::size_t k);
// Adjacent transpositions only.
std::vector<LinearSubstitution> sym_generators(std::size_t k);

struct GroupSpec {
  GroupKind kind = GroupKind::custom;
  std::vector<LinearSubstitution> generators;

  static GroupSpec general_linear(std::size_t k);
  static GroupSpec symmetric(std::size_t k);
  // Throws Error(invalid_argument) unless every generator is invertible.
  static GroupSpec custom(std::vector<LinearSubstitution> generators);
};

// Column j is the class of g(basis monomial j).
F2Matrix action_matrix(const LinearSubstitution& g, const CohitSpace& space);

// Fixed space ker(A_g - I), in cohit coordinates.
Subspace fixed_space(const LinearSubstitution& g, const CohitSpace& space);

struct InvariantReport {
  std::size_t vars = 0;
  Exponent degree = 0;
  GroupKind group = GroupKind::custom;
  std::size_t cohit_dim = 0;
  std::size_t invariant_dim = 0;
  Subspace invariants;                    // cohit coordinates, canonical
  std::vector<Polynomial> invariant_basis;  // representatives
  std::vector<std::size_t> per_generator_fixed_dims;
};

InvariantReport invariant_subspace(const CohitSpace& space,
                                   const GroupSpec& group);
InvariantReport invariant_subspace(std::size_t k, Exponent d,
                                   const GroupSpec& group);

// {k, d, group, cohit_dim, invariant_dim, basis, per_generator_fixed_dims}
std::string invariant_report_json(const InvariantReport& report);

// Class of project(p, kill) in `target`, a cohit space of the projected
// arity and the same degree.
BitVector project_class(const Polynomial& p, std::span<const std::size_t> kill,
                        const CohitSpace& target);

struct ProjectionImage {
  Polynomial source;     // invariant representative
  Polynomial projected;  // project(source, kill)
  BitVector image;       // class in the target space
};

struct ProjectionReplay {
  std::vector<std::size_t> kill;
  std::size_t target_vars = 0;
  Exponent degree = 0;
  std::vector<ProjectionImage> images;
  bool vacuous() const { return images.empty(); }
};

// Projects each invariant basis vector of `report` away from the killed
// variables and re-reduces it in `target`.
ProjectionReplay replay_projection_argument(const InvariantReport& report,
                                            std::span<const std::size_t> kill,
                                            const CohitSpace& target);
ProjectionReplay replay_projection_argument(std::size_t k, Exponent d,
                                            std::span<const std::size_t> kill,
                                            const GroupSpec& group);

}  // namespace hitcalc
