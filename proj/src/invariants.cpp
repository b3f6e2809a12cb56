#include "hitcalc/invariants.hpp"

#include <json.hpp>

#include "hitcalc/error.hpp"
#include "parallel.hpp"

namespace hitcalc {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::general_linear:
      return "gl";
    case GroupKind::symmetric:
      return "sym";
    case GroupKind::custom:
      return "custom";
  }
  return "custom";
}

std::vector<LinearSubstitution> sym_generators(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be positive");
  std::vector<LinearSubstitution> gens;
  for (std::size_t i = 0; i + 1 < k; ++i)
    gens.push_back(LinearSubstitution::transposition(k, i, i + 1));
  return gens;
}

std::vector<LinearSubstitution> gl_generators(std::size_t k) {
  auto gens = sym_generators(k);
  if (k >= 2) gens.push_back(LinearSubstitution::transvection(k, 0, 1));
  return gens;
}

GroupSpec GroupSpec::general_linear(std::size_t k) {
  return {GroupKind::general_linear, gl_generators(k)};
}

GroupSpec GroupSpec::symmetric(std::size_t k) {
  return {GroupKind::symmetric, sym_generators(k)};
}

GroupSpec GroupSpec::custom(std::vector<LinearSubstitution> generators) {
  for (const auto& g : generators)
    if (!g.is_invertible())
      throw Error(ErrorCode::invalid_argument,
                  "group generator is not invertible over F2");
  return {GroupKind::custom, std::move(generators)};
}

F2Matrix action_matrix(const LinearSubstitution& g, const CohitSpace& space) {
  if (g.arity() != space.vars())
    throw Error(ErrorCode::arity_mismatch,
                "substitution arity does not match the cohit space");
  const std::size_t n = space.dim();
  std::vector<BitVector> columns(n);
  detail::parallel_for(n, [&](std::size_t j) {
    columns[j] = space.reduce(substitute(space.basis_monomial(j), g));
  });
  return F2Matrix::from_rows(n, std::move(columns)).transpose();
}

Subspace fixed_space(const LinearSubstitution& g, const CohitSpace& space) {
  F2Matrix m = action_matrix(g, space);
  m += F2Matrix::identity(space.dim());
  return Subspace{space.dim(), kernel(m)};
}

InvariantReport invariant_subspace(const CohitSpace& space,
                                   const GroupSpec& group) {
  InvariantReport r;
  r.vars = space.vars();
  r.degree = space.degree();
  r.group = group.kind;
  r.cohit_dim = space.dim();

  std::vector<Subspace> fixed;
  fixed.push_back(Subspace{space.dim(), {}});
  // Start from the whole space so a generator-free group (k = 1) works.
  for (std::size_t j = 0; j < space.dim(); ++j)
    fixed.front().basis.push_back(BitVector::unit(space.dim(), j));
  for (const auto& g : group.generators) {
    fixed.push_back(fixed_space(g, space));
    r.per_generator_fixed_dims.push_back(fixed.back().basis.size());
  }
  r.invariants = intersect(fixed);
  r.invariant_dim = r.invariants.basis.size();
  for (const auto& v : r.invariants.basis)
    r.invariant_basis.push_back(space.representative(v));
  return r;
}

InvariantReport invariant_subspace(std::size_t k, Exponent d,
                                   const GroupSpec& group) {
  return invariant_subspace(CohitSpace(k, d), group);
}

std::string invariant_report_json(const InvariantReport& report) {
  nlohmann::ordered_json j;
  j["k"] = report.vars;
  j["d"] = report.degree;
  j["group"] = to_string(report.group);
  j["cohit_dim"] = report.cohit_dim;
  j["invariant_dim"] = report.invariant_dim;
  auto basis = nlohmann::ordered_json::array();
  for (const auto& p : report.invariant_basis) basis.push_back(to_string(p));
  j["basis"] = std::move(basis);
  j["per_generator_fixed_dims"] = report.per_generator_fixed_dims;
  return j.dump(2) + "\n";
}

BitVector project_class(const Polynomial& p, std::span<const std::size_t> kill,
                        const CohitSpace& target) {
  return target.reduce(project(p, kill));
}

ProjectionReplay replay_projection_argument(const InvariantReport& report,
                                            std::span<const std::size_t> kill,
                                            const CohitSpace& target) {
  ProjectionReplay out;
  out.kill.assign(kill.begin(), kill.end());
  out.target_vars = target.vars();
  out.degree = target.degree();
  for (const auto& p : report.invariant_basis) {
    auto projected = project(p, kill);
    auto image = target.reduce(projected);
    out.images.push_back({p, std::move(projected), std::move(image)});
  }
  return out;
}

ProjectionReplay replay_projection_argument(std::size_t k, Exponent d,
                                            std::span<const std::size_t> kill,
                                            const GroupSpec& group) {
  if (kill.size() >= k)
    throw Error(ErrorCode::invalid_argument,
                "projection must keep at least one variable");
  const auto report = invariant_subspace(k, d, group);
  const CohitSpace target(k - kill.size(), d);
  return replay_projection_argument(report, kill, target);
}

}  // namespace hitcalc
