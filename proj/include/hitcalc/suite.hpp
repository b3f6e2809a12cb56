#pragma once

// End-to-end reproduction of the degree-11, five-variable computation:
// the identity ledger, the spanning and decomposition checks for the
// monomial families A..H, the GL_5 invariant computation and the
// transfer conclusion drawn from it.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hitcalc/algebra.hpp"
#include "hitcalc/certificate.hpp"
#include "hitcalc/hit_engine.hpp"

namespace hitcalc {

inline constexpr std::size_t kTargetVars = 5;
inline constexpr Exponent kTargetDegree = 11;
inline constexpr std::size_t kTargetCohitDim = 315;

enum class IdentityMode { exact, mod_hit, non_hit };

std::string to_string(IdentityMode mode);

// One displayed identity. With `transform` = g the left side is g(lhs), or
// g(lhs) + lhs when `plus_lhs` is set.
//  exact:   left = rhs + sum Sq^i(source) as polynomials (and, as a
//           secondary assertion, left + rhs is hit);
//  mod_hit: left + rhs is hit;
//  non_hit: left is not hit (rhs must be 0).
struct IdentityRecord {
  std::string id;
  std::size_t vars = 0;
  IdentityMode mode = IdentityMode::exact;
  Polynomial lhs;
  std::optional<LinearSubstitution> transform;
  std::string transform_text;
  bool plus_lhs = false;
  std::vector<Summand> sq_terms;
  Polynomial rhs;
  std::string section;
  std::string quote;
  std::string note;

  Exponent degree() const;
};

// A passage that carries no checkable equality, with the reason.
struct ProseNote {
  std::string section;
  std::string passage;
  std::string reason;
};

struct Ledger {
  std::vector<IdentityRecord> records;
  std::vector<ProseNote> prose_only;
  std::size_t expected_record_count = 0;
};

// Throws Error(parse) on malformed input, Error(arity_mismatch /
// degree_mismatch) on inconsistent records, and when the record count
// disagrees with expected_record_count.
Ledger parse_ledger(std::string_view text);
Ledger load_ledger(const std::string& path);

// Thread-safe memo of cohit spaces keyed by (k, d).
class CohitCache {
 public:
  std::shared_ptr<const CohitSpace> get(std::size_t k, Exponent d);

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, Exponent>,
           std::shared_ptr<const CohitSpace>> spaces_;
};

struct IdentityResult {
  std::string id;
  IdentityMode mode = IdentityMode::exact;
  bool pass = false;
  bool exact_holds = false;    // left == rhs + sum Sq^i(source)
  bool mod_hit_holds = false;  // left + rhs is hit
};

IdentityResult evaluate_identity(const IdentityRecord& record,
                                 CohitCache& cache);
// Results ordered by record id.
std::vector<IdentityResult> run_identity_ledger(const Ledger& ledger,
                                                CohitCache& cache);

struct Family {
  std::string name;
  std::vector<Monomial> generators;  // closed under permutation on use
};

// Distinct permutations of the exponents of m, in descending lex order.
std::vector<Monomial> permutations_of(const Monomial& m);

// The families A..H of the degree-11 five-variable computation.
std::vector<Family> target_families();

struct SpanningResult {
  bool pass = false;
  std::size_t span_dim = 0;
  std::size_t unreached = 0;  // monomials whose class lies outside the span
  std::optional<Monomial> first_unreached;
};

// Every degree-d monomial reduces into the span of the classes of all
// permutations of the family generators.
SpanningResult check_spanning(const CohitSpace& space,
                              const std::vector<Family>& families);

struct DecompositionResult {
  std::vector<std::pair<std::string, std::size_t>> dims;
  std::size_t dim_sum = 0;
  std::size_t span_dim = 0;
  std::size_t cohit_dim = 0;
  bool direct = false;  // dim_sum == span_dim == cohit_dim
};

// Each entry of `groups` names one summand L(X) built from the listed
// families; the L(G,H) summand merges two families.
DecompositionResult check_decomposition(
    const CohitSpace& space, const std::vector<Family>& families,
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        groups);

struct ProjectionSummary {
  std::string kill;  // variable names, comma separated
  std::size_t target_vars = 0;
  std::size_t images = 0;
  std::size_t nonzero_images = 0;
};

struct SuiteOptions {
  std::size_t vars = kTargetVars;
  Exponent degree = kTargetDegree;
  std::string ledger_path = HITCALC_DEFAULT_LEDGER;
};

struct SuiteReport {
  std::size_t vars = 0;
  Exponent degree = 0;
  bool applicable = false;  // (vars, degree) is the target pair
  std::size_t cohit_dim = 0;
  std::size_t gl_invariant_dim = 0;
  std::size_t sym_invariant_dim = 0;
  std::vector<IdentityResult> identities;
  std::size_t identities_passed = 0;
  std::size_t ledger_records = 0;
  std::size_t prose_only = 0;
  std::optional<SpanningResult> spanning;
  std::optional<SpanningResult> spanning_without_gh;
  std::optional<DecompositionResult> decomposition;
  std::vector<ProjectionSummary> projections;
  std::optional<std::string> transfer_conclusion;
  std::vector<std::string> assumptions;
  bool all_pass = false;
};

SuiteReport run_full_suite(const SuiteOptions& options);
SuiteReport run_full_suite(const SuiteOptions& options, const Ledger& ledger);

std::string suite_report_json(const SuiteReport& report);
std::string suite_report_text(const SuiteReport& report);

}  // namespace hitcalc
