#include "hitcalc/suite.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "hitcalc/error.hpp"
#include "hitcalc/invariants.hpp"
#include "parallel.hpp"

namespace hitcalc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void ledger_error(const std::string& id, const std::string& what) {
  throw Error(ErrorCode::parse, "ledger record " + id + ": " + what);
}

IdentityMode parse_mode(const std::string& id, const std::string& s) {
  if (s == "exact") return IdentityMode::exact;
  if (s == "mod-hit") return IdentityMode::mod_hit;
  if (s == "non-hit") return IdentityMode::non_hit;
  ledger_error(id, "unknown mode '" + s + "'");
}

IdentityRecord parse_record(const json& j) {
  IdentityRecord r;
  r.id = j.at("id").get<std::string>();
  r.vars = j.at("vars").get<std::size_t>();
  if (r.vars == 0) ledger_error(r.id, "vars must be positive");
  r.mode = parse_mode(r.id, j.at("mode").get<std::string>());
  r.lhs = parse_polynomial(j.at("lhs").get<std::string>(), r.vars);
  if (j.contains("transform")) {
    r.transform_text = j.at("transform").get<std::string>();
    r.transform = LinearSubstitution::parse(r.vars, r.transform_text);
  }
  r.plus_lhs = j.value("plus_lhs", false);
  if (r.plus_lhs && !r.transform) ledger_error(r.id, "plus_lhs needs transform");
  for (const auto& s : j.at("sq_terms")) {
    r.sq_terms.push_back(
        {SquareIndex(s.at("i").get<Exponent>()),
         parse_polynomial(s.at("source").get<std::string>(), r.vars)});
  }
  r.rhs = parse_polynomial(j.at("rhs").get<std::string>(), r.vars);
  r.section = j.at("section").get<std::string>();
  r.quote = j.at("quote").get<std::string>();
  r.note = j.value("note", std::string{});

  if (r.section.empty() || r.quote.empty())
    ledger_error(r.id, "section and quote are required");
  if (r.lhs.is_zero()) ledger_error(r.id, "lhs must be nonzero");
  if (!r.lhs.is_homogeneous())
    throw Error(ErrorCode::degree_mismatch, r.id + ": lhs is not homogeneous");
  const Exponent d = r.degree();
  if (!r.rhs.is_homogeneous_of(d))
    throw Error(ErrorCode::degree_mismatch, r.id + ": rhs degree differs");
  for (const auto& s : r.sq_terms) {
    if (s.square.value == 0 || s.square.value > d ||
        !s.source.is_homogeneous_of(d - s.square.value))
      throw Error(ErrorCode::degree_mismatch,
                  r.id + ": Sq term has inconsistent degree");
  }
  if (r.mode == IdentityMode::non_hit && (!r.rhs.is_zero() || !r.sq_terms.empty()))
    ledger_error(r.id, "non-hit records take rhs 0 and no Sq terms");
  return r;
}

std::string kill_names(std::size_t k, std::span<const std::size_t> kill) {
  std::string s;
  for (auto v : kill) {
    if (!s.empty()) s += ',';
    s += variable_name(k, v);
  }
  return s;
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string to_string(IdentityMode mode) {
  switch (mode) {
    case IdentityMode::exact:
      return "exact";
    case IdentityMode::mod_hit:
      return "mod-hit";
    case IdentityMode::non_hit:
      return "non-hit";
  }
  return "exact";
}

Exponent IdentityRecord::degree() const {
  return lhs.is_zero() ? 0 : lhs.terms().front().degree();
}

Ledger parse_ledger(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("ledger JSON: ") + e.what());
  }
  Ledger ledger;
  try {
    ledger.expected_record_count = j.at("expected_record_count").get<std::size_t>();
    std::set<std::string> ids;
    for (const auto& r : j.at("records")) {
      ledger.records.push_back(parse_record(r));
      if (!ids.insert(ledger.records.back().id).second)
        ledger_error(ledger.records.back().id, "duplicate id");
    }
    if (j.contains("prose_only")) {
      for (const auto& p : j.at("prose_only"))
        ledger.prose_only.push_back({p.at("section").get<std::string>(),
                                     p.at("passage").get<std::string>(),
                                     p.at("reason").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("ledger fields: ") + e.what());
  }
  if (ledger.records.size() != ledger.expected_record_count)
    throw Error(ErrorCode::parse,
                "ledger has " + std::to_string(ledger.records.size()) +
                    " records, expected " +
                    std::to_string(ledger.expected_record_count));
  return ledger;
}

Ledger load_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open ledger " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ledger(ss.str());
}

std::shared_ptr<const CohitSpace> CohitCache::get(std::size_t k, Exponent d) {
  std::lock_guard lock(mutex_);
  auto& slot = spaces_[{k, d}];
  if (!slot) slot = std::make_shared<const CohitSpace>(k, d);
  return slot;
}

IdentityResult evaluate_identity(const IdentityRecord& r, CohitCache& cache) {
  IdentityResult out{r.id, r.mode, false, false, false};
  Polynomial left = r.lhs;
  if (r.transform) {
    left = substitute(r.lhs, *r.transform);
    if (r.plus_lhs) left += r.lhs;
  }
  Polynomial expanded = r.rhs;
  for (const auto& s : r.sq_terms) expanded += sq_poly(s.square, s.source);
  out.exact_holds = left == expanded;

  const auto space = cache.get(r.vars, r.degree());
  out.mod_hit_holds = space->is_hit(left + r.rhs);
  switch (r.mode) {
    case IdentityMode::exact:
      out.pass = out.exact_holds && out.mod_hit_holds;
      break;
    case IdentityMode::mod_hit:
      out.pass = out.mod_hit_holds;
      break;
    case IdentityMode::non_hit:
      out.pass = !out.mod_hit_holds;
      break;
  }
  return out;
}

std::vector<IdentityResult> run_identity_ledger(const Ledger& ledger,
                                                CohitCache& cache) {
  std::vector<IdentityResult> results(ledger.records.size());
  detail::parallel_for(results.size(), [&](std::size_t i) {
    results[i] = evaluate_identity(ledger.records[i], cache);
  });
  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

std::vector<Monomial> permutations_of(const Monomial& m) {
  std::vector<Exponent> exps(m.exponents().begin(), m.exponents().end());
  std::sort(exps.begin(), exps.end(), std::greater<>());
  std::vector<Monomial> out;
  do {
    out.emplace_back(exps);
  } while (std::next_permutation(exps.begin(), exps.end(), std::greater<>()));
  return out;
}

std::vector<Family> target_families() {
  return {
      {"A", {{7, 3, 1, 0, 0}}}, {"B", {{5, 3, 3, 0, 0}}},
      {"C", {{7, 2, 1, 1, 0}}}, {"D", {{5, 3, 2, 1, 0}}},
      {"E", {{7, 1, 1, 1, 1}}}, {"F", {{3, 3, 3, 1, 1}}},
      {"G", {{5, 3, 1, 1, 1}}}, {"H", {{4, 3, 2, 1, 1}}},
  };
}

namespace {

Subspace family_span(const CohitSpace& space,
                     const std::vector<const Family*>& families) {
  Subspace s{space.dim(), {}};
  for (const auto* f : families)
    for (const auto& g : f->generators)
      for (const auto& m : permutations_of(g))
        s.basis.push_back(space.reduce(Polynomial(m)));
  return s.canonical();
}

const Family& find_family(const std::vector<Family>& families,
                          const std::string& name) {
  for (const auto& f : families)
    if (f.name == name) return f;
  throw Error(ErrorCode::invalid_argument, "unknown family " + name);
}

}  // namespace

SpanningResult check_spanning(const CohitSpace& space,
                              const std::vector<Family>& families) {
  std::vector<const Family*> all;
  for (const auto& f : families) all.push_back(&f);
  const Subspace span = family_span(space, all);
  const Echelon e = rref(F2Matrix::from_rows(space.dim(), span.basis));

  SpanningResult out;
  out.span_dim = e.rank();
  for (const auto& m : space.monomials().monomials()) {
    BitVector v = space.reduce(Polynomial(m));
    e.reduce(v);
    if (!v.is_zero()) {
      if (!out.first_unreached) out.first_unreached = m;
      ++out.unreached;
    }
  }
  out.pass = out.unreached == 0;
  return out;
}

DecompositionResult check_decomposition(
    const CohitSpace& space, const std::vector<Family>& families,
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        groups) {
  DecompositionResult out;
  out.cohit_dim = space.dim();
  Subspace total{space.dim(), {}};
  for (const auto& [name, members] : groups) {
    std::vector<const Family*> fs;
    for (const auto& m : members) fs.push_back(&find_family(families, m));
    Subspace s = family_span(space, fs);
    out.dims.emplace_back(name, s.basis.size());
    out.dim_sum += s.basis.size();
    total.basis.insert(total.basis.end(), s.basis.begin(), s.basis.end());
  }
  out.span_dim = total.dim();
  out.direct = out.dim_sum == out.span_dim && out.span_dim == out.cohit_dim;
  return out;
}

SuiteReport run_full_suite(const SuiteOptions& options) {
  return run_full_suite(options, load_ledger(options.ledger_path));
}

SuiteReport run_full_suite(const SuiteOptions& options, const Ledger& ledger) {
  SuiteReport rep;
  rep.vars = options.vars;
  rep.degree = options.degree;
  rep.applicable =
      options.vars == kTargetVars && options.degree == kTargetDegree;
  rep.ledger_records = ledger.records.size();
  rep.prose_only = ledger.prose_only.size();

  CohitCache cache;
  const auto space = cache.get(options.vars, options.degree);
  rep.cohit_dim = space->dim();
  const auto gl = invariant_subspace(*space, GroupSpec::general_linear(options.vars));
  rep.gl_invariant_dim = gl.invariant_dim;
  rep.sym_invariant_dim =
      invariant_subspace(*space, GroupSpec::symmetric(options.vars)).invariant_dim;

  // Off target, only the records living in this (k, d) are evaluated.
  Ledger selected;
  for (const auto& r : ledger.records)
    if (rep.applicable ||
        (r.vars == options.vars && r.degree() == options.degree))
      selected.records.push_back(r);
  rep.identities = run_identity_ledger(selected, cache);
  rep.identities_passed = static_cast<std::size_t>(
      std::count_if(rep.identities.begin(), rep.identities.end(),
                    [](const auto& r) { return r.pass; }));
  bool ok = rep.identities_passed == rep.identities.size();

  if (!rep.applicable) {
    rep.all_pass = ok;
    return rep;
  }

  const auto families = target_families();
  rep.spanning = check_spanning(*space, families);
  std::vector<Family> without_gh(families.begin(), families.end() - 2);
  rep.spanning_without_gh = check_spanning(*space, without_gh);
  rep.decomposition = check_decomposition(
      *space, families,
      {{"A", {"A"}}, {"B", {"B"}}, {"C", {"C"}}, {"D", {"D"}},
       {"E", {"E"}}, {"F", {"F"}}, {"GH", {"G", "H"}}});

  const std::vector<std::vector<std::size_t>> kills = {{3, 4}, {4}};
  for (const auto& kill : kills) {
    const auto target = cache.get(options.vars - kill.size(), options.degree);
    const auto replay = replay_projection_argument(gl, kill, *target);
    ProjectionSummary s{kill_names(options.vars, kill), target->vars(),
                        replay.images.size(), 0};
    for (const auto& img : replay.images)
      if (!img.image.is_zero()) ++s.nonzero_images;
    rep.projections.push_back(s);
  }

  ok = ok && rep.spanning->pass && !rep.spanning_without_gh->pass &&
       rep.decomposition->direct &&
       rep.decomposition->dim_sum == kTargetCohitDim;
  const bool dims_ok =
      rep.cohit_dim == kTargetCohitDim && rep.gl_invariant_dim == 0;
  rep.assumptions.push_back(
      "P(h2) is a nonzero element of Ext_A^{5,16}(F2,F2) (external input from "
      "published Ext computations)");
  rep.assumptions.push_back(
      "the domain F2 ⊗_{GL5} PH_11(BV_5) of the fifth algebraic transfer is "
      "dual to (F2 ⊗_A P5)_11^{GL5}");
  if (dims_ok) {
    rep.transfer_conclusion =
        "(F2 ⊗_A P5)_11 has dimension 315 and its GL5-invariants vanish, so "
        "F2 ⊗_{GL5} PH_11(BV_5) = 0. The image of Tr_5 in bidegree (5,16) is "
        "therefore zero and cannot contain the nonzero element P(h2): the "
        "fifth algebraic transfer is not an epimorphism in degree 11.";
  }
  rep.all_pass = ok && dims_ok;
  return rep;
}

std::string suite_report_json(const SuiteReport& rep) {
  ordered_json j;
  j["vars"] = rep.vars;
  j["degree"] = rep.degree;
  j["applicable"] = rep.applicable;
  j["cohit_dim"] = rep.cohit_dim;
  j["gl_invariant_dim"] = rep.gl_invariant_dim;
  j["sym_invariant_dim"] = rep.sym_invariant_dim;
  auto ids = ordered_json::array();
  for (const auto& r : rep.identities) {
    ordered_json e;
    e["id"] = r.id;
    e["mode"] = to_string(r.mode);
    e["pass"] = r.pass;
    e["exact_holds"] = r.exact_holds;
    e["mod_hit_holds"] = r.mod_hit_holds;
    ids.push_back(std::move(e));
  }
  j["identities"] = std::move(ids);
  j["identities_passed"] = rep.identities_passed;
  j["identities_total"] = rep.identities.size();
  j["ledger_records"] = rep.ledger_records;
  j["prose_only"] = rep.prose_only;
  if (rep.spanning) {
    ordered_json s;
    s["pass"] = rep.spanning->pass;
    s["span_dim"] = rep.spanning->span_dim;
    s["without_gh_pass"] = rep.spanning_without_gh->pass;
    s["without_gh_span_dim"] = rep.spanning_without_gh->span_dim;
    s["without_gh_unreached"] = rep.spanning_without_gh->unreached;
    j["spanning"] = std::move(s);
  } else {
    j["spanning"] = nullptr;
  }
  if (rep.decomposition) {
    ordered_json d;
    ordered_json dims;
    for (const auto& [name, dim] : rep.decomposition->dims) dims[name] = dim;
    d["dims"] = std::move(dims);
    d["dim_sum"] = rep.decomposition->dim_sum;
    d["span_dim"] = rep.decomposition->span_dim;
    d["direct"] = rep.decomposition->direct;
    j["decomposition"] = std::move(d);
  } else {
    j["decomposition"] = nullptr;
  }
  auto proj = ordered_json::array();
  for (const auto& p : rep.projections) {
    ordered_json e;
    e["kill"] = p.kill;
    e["target_vars"] = p.target_vars;
    e["images"] = p.images;
    e["nonzero_images"] = p.nonzero_images;
    e["vacuous"] = p.images == 0;
    proj.push_back(std::move(e));
  }
  j["projections"] = std::move(proj);
  j["assumptions"] = rep.assumptions;
  if (rep.transfer_conclusion)
    j["transfer_conclusion"] = *rep.transfer_conclusion;
  else
    j["transfer_conclusion"] = nullptr;
  j["all_pass"] = rep.all_pass;
  return j.dump(2) + "\n";
}

std::string suite_report_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "hit problem verification, k=" << rep.vars << " d=" << rep.degree
     << (rep.applicable ? "" : " (target checks not applicable)") << "\n";
  os << "  cohit dimension        " << rep.cohit_dim;
  if (rep.applicable)
    os << "  (expected " << kTargetCohitDim << ")  "
       << pass_fail(rep.cohit_dim == kTargetCohitDim);
  os << "\n  GL invariant dimension " << rep.gl_invariant_dim;
  if (rep.applicable) os << "  (expected 0)  " << pass_fail(rep.gl_invariant_dim == 0);
  os << "\n  S invariant dimension  " << rep.sym_invariant_dim << "\n";
  os << "  identities             " << rep.identities_passed << "/"
     << rep.identities.size() << "  "
     << pass_fail(rep.identities_passed == rep.identities.size()) << "\n";
  for (const auto& r : rep.identities) {
    // Off target the handful of local records are listed in full.
    if (!rep.applicable && r.pass) {
      os << "    PASS " << r.id << " (" << to_string(r.mode) << ")\n";
      continue;
    }
    if (r.pass) continue;
    os << "    FAIL " << r.id << " (" << to_string(r.mode)
       << ", exact=" << r.exact_holds << ", mod-hit=" << r.mod_hit_holds << ")\n";
  }
  if (rep.spanning) {
    os << "  families A-H span      " << rep.spanning->span_dim << "  "
       << pass_fail(rep.spanning->pass) << "\n";
    os << "  families A-F span      " << rep.spanning_without_gh->span_dim
       << " (" << rep.spanning_without_gh->unreached
       << " monomials unreached, expected incomplete)  "
       << pass_fail(!rep.spanning_without_gh->pass) << "\n";
  }
  if (rep.decomposition) {
    os << "  decomposition          ";
    for (const auto& [name, dim] : rep.decomposition->dims)
      os << "L(" << name << ")=" << dim << " ";
    os << "sum=" << rep.decomposition->dim_sum
       << " span=" << rep.decomposition->span_dim << "  "
       << pass_fail(rep.decomposition->direct) << "\n";
  }
  for (const auto& p : rep.projections) {
    os << "  projection kill {" << p.kill << "} -> P" << p.target_vars << ": "
       << p.images << " invariant images"
       << (p.images == 0 ? " (vacuous)" : "") << "\n";
  }
  if (rep.transfer_conclusion) {
    os << "\nConclusion:\n  " << *rep.transfer_conclusion << "\n";
    os << "Assumptions:\n";
    for (const auto& a : rep.assumptions) os << "  - " << a << "\n";
  }
  os << "\n" << (rep.all_pass ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace hitcalc
