#include "hitcalc/hitcalc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hitcalc/certificate.hpp"
#include "hitcalc/error.hpp"
#include "hitcalc/hit_engine.hpp"
#include "hitcalc/invariants.hpp"
#include "hitcalc/suite.hpp"

struct hitcalc_cohit {
  std::shared_ptr<const hitcalc::CohitSpace> space;
};

namespace {

thread_local std::string last_error;

hitcalc_status to_status(hitcalc::ErrorCode code) {
  using hitcalc::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return HITCALC_INVALID_ARGUMENT;
    case ErrorCode::parse: return HITCALC_PARSE_ERROR;
    case ErrorCode::arity_mismatch: return HITCALC_ARITY_MISMATCH;
    case ErrorCode::degree_mismatch: return HITCALC_DEGREE_MISMATCH;
    case ErrorCode::overflow: return HITCALC_OVERFLOW;
    case ErrorCode::malformed_certificate: return HITCALC_MALFORMED_CERTIFICATE;
    case ErrorCode::io: return HITCALC_IO_ERROR;
  }
  return HITCALC_INTERNAL_ERROR;
}

hitcalc_status fail(hitcalc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
hitcalc_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return HITCALC_OK;
  } catch (const hitcalc::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HITCALC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(HITCALC_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(HITCALC_INTERNAL_ERROR, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw hitcalc::Error(hitcalc::ErrorCode::invalid_argument, what);
}

char* dup_string(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string cohit_json(const hitcalc::CohitSpace& space) {
  nlohmann::ordered_json j;
  j["k"] = space.vars();
  j["d"] = space.degree();
  j["monomials"] = space.monomials().size();
  j["hit_rank"] = space.hit_rank();
  j["cohit_dim"] = space.dim();
  auto basis = nlohmann::ordered_json::array();
  for (const auto& m : space.basis_monomials())
    basis.push_back(hitcalc::to_string(m));
  j["basis"] = std::move(basis);
  return j.dump(2) + "\n";
}

std::string cohit_text(const hitcalc::CohitSpace& space) {
  std::ostringstream os;
  os << "k = " << space.vars() << ", d = " << space.degree() << "\n"
     << "monomials  " << space.monomials().size() << "\n"
     << "hit rank   " << space.hit_rank() << "\n"
     << "cohit dim  " << space.dim() << "\n"
     << "basis:\n";
  for (const auto& m : space.basis_monomials())
    os << "  " << hitcalc::to_string(m) << "\n";
  return os.str();
}

std::string invariants_text(const hitcalc::InvariantReport& r) {
  std::ostringstream os;
  os << "k = " << r.vars << ", d = " << r.degree
     << ", group = " << hitcalc::to_string(r.group) << "\n"
     << "cohit dim      " << r.cohit_dim << "\n"
     << "fixed dims    ";
  for (auto n : r.per_generator_fixed_dims) os << " " << n;
  os << "\ninvariant dim  " << r.invariant_dim << "\n";
  for (const auto& p : r.invariant_basis)
    os << "  " << hitcalc::to_string(p) << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* hitcalc_version(void) { return "0.1.0"; }

const char* hitcalc_last_error(void) { return last_error.c_str(); }

const char* hitcalc_status_name(hitcalc_status status) {
  switch (status) {
    case HITCALC_OK: return "ok";
    case HITCALC_INVALID_ARGUMENT: return "invalid argument";
    case HITCALC_PARSE_ERROR: return "parse error";
    case HITCALC_ARITY_MISMATCH: return "arity mismatch";
    case HITCALC_DEGREE_MISMATCH: return "degree mismatch";
    case HITCALC_OVERFLOW: return "overflow";
    case HITCALC_MALFORMED_CERTIFICATE: return "malformed certificate";
    case HITCALC_IO_ERROR: return "i/o error";
    case HITCALC_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void hitcalc_string_free(char* s) { std::free(s); }

hitcalc_status hitcalc_polynomial_degree(const char* poly, size_t vars,
                                         uint64_t* degree, int* is_zero) {
  return guarded([&] {
    require(poly && degree && is_zero, "null argument");
    const auto p = hitcalc::parse_polynomial(poly, vars);
    *degree = 0;
    *is_zero = p.is_zero() ? 1 : 0;
    if (p.is_zero()) return;
    if (!p.is_homogeneous())
      throw hitcalc::Error(hitcalc::ErrorCode::degree_mismatch,
                           "polynomial is not homogeneous");
    *degree = p.terms().front().degree();
  });
}

hitcalc_status hitcalc_cohit_create(size_t vars, uint64_t degree,
                                    hitcalc_cohit** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    auto space = std::make_shared<const hitcalc::CohitSpace>(vars, degree);
    *out = new hitcalc_cohit{std::move(space)};
  });
}

void hitcalc_cohit_destroy(hitcalc_cohit* space) { delete space; }

hitcalc_status hitcalc_cohit_dim(const hitcalc_cohit* space, size_t* out) {
  return guarded([&] {
    require(space && out, "null argument");
    *out = space->space->dim();
  });
}

hitcalc_status hitcalc_cohit_hit_rank(const hitcalc_cohit* space,
                                      size_t* out) {
  return guarded([&] {
    require(space && out, "null argument");
    *out = space->space->hit_rank();
  });
}

hitcalc_status hitcalc_cohit_monomial_count(const hitcalc_cohit* space,
                                            size_t* out) {
  return guarded([&] {
    require(space && out, "null argument");
    *out = space->space->monomials().size();
  });
}

hitcalc_status hitcalc_cohit_report(const hitcalc_cohit* space,
                                    hitcalc_format format, char** out) {
  return guarded([&] {
    require(space && out, "null argument");
    *out = dup_string(format == HITCALC_FORMAT_JSON ? cohit_json(*space->space)
                                                    : cohit_text(*space->space));
  });
}

hitcalc_status hitcalc_cohit_is_hit(const hitcalc_cohit* space,
                                    const char* poly, int* is_hit) {
  return guarded([&] {
    require(space && poly && is_hit, "null argument");
    const auto p = hitcalc::parse_polynomial(poly, space->space->vars());
    *is_hit = space->space->is_hit(p) ? 1 : 0;
  });
}

hitcalc_status hitcalc_cohit_certificate(const hitcalc_cohit* space,
                                         const char* poly, char** out) {
  return guarded([&] {
    require(space && poly && out, "null argument");
    const auto p = hitcalc::parse_polynomial(poly, space->space->vars());
    *out = dup_string(
        hitcalc::certificate_to_json(space->space->certificate(p)));
  });
}

hitcalc_status hitcalc_certificate_verify(const char* json, int* holds,
                                          int* proves_hit) {
  return guarded([&] {
    require(json != nullptr, "null argument");
    const auto c = hitcalc::certificate_from_json(json);
    const bool ok = hitcalc::verify_certificate(c);
    if (holds) *holds = ok ? 1 : 0;
    if (proves_hit) *proves_hit = ok && c.proves_hit() ? 1 : 0;
  });
}

hitcalc_status hitcalc_invariants_report(size_t vars, uint64_t degree,
                                         hitcalc_group group,
                                         hitcalc_format format, char** out,
                                         size_t* invariant_dim) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(group == HITCALC_GROUP_GL || group == HITCALC_GROUP_SYM,
            "unknown group");
    const auto spec = group == HITCALC_GROUP_GL
                          ? hitcalc::GroupSpec::general_linear(vars)
                          : hitcalc::GroupSpec::symmetric(vars);
    const auto report = hitcalc::invariant_subspace(vars, degree, spec);
    *out = dup_string(format == HITCALC_FORMAT_JSON
                          ? hitcalc::invariant_report_json(report)
                          : invariants_text(report));
    if (invariant_dim) *invariant_dim = report.invariant_dim;
  });
}

hitcalc_status hitcalc_run_suite(size_t vars, uint64_t degree,
                                    const char* ledger_path,
                                    hitcalc_format format, char** out,
                                    int* all_pass) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    hitcalc::SuiteOptions options;
    options.vars = vars;
    options.degree = degree;
    if (ledger_path) options.ledger_path = ledger_path;
    const auto report = hitcalc::run_full_suite(options);
    *out = dup_string(format == HITCALC_FORMAT_JSON
                          ? hitcalc::suite_report_json(report)
                          : hitcalc::suite_report_text(report));
    if (all_pass) *all_pass = report.all_pass ? 1 : 0;
  });
}

}  // extern "C"
