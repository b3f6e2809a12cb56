// hitcalc: command-line probe for the cohit, invariant, certificate and
// reproduction routines. Links only the C interface.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "hitcalc/hitcalc.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

// Owns a string handed out by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { hitcalc_string_free(p); }
};

int report_error(hitcalc_status s) {
  std::cerr << "hitcalc: " << hitcalc_status_name(s) << ": "
            << hitcalc_last_error() << "\n";
  return kExitError;
}

int run_cohit(std::size_t k, std::uint64_t d, bool json) {
  hitcalc_cohit* space = nullptr;
  if (auto s = hitcalc_cohit_create(k, d, &space)) return report_error(s);
  LibString out;
  auto s = hitcalc_cohit_report(
      space, json ? HITCALC_FORMAT_JSON : HITCALC_FORMAT_TEXT, &out.p);
  hitcalc_cohit_destroy(space);
  if (s) return report_error(s);
  std::cout << out.p;
  return 0;
}

int run_invariants(std::size_t k, std::uint64_t d, const std::string& group,
                   bool json) {
  LibString out;
  std::size_t dim = 0;
  auto g = group == "gl" ? HITCALC_GROUP_GL : HITCALC_GROUP_SYM;
  if (auto s = hitcalc_invariants_report(
          k, d, g, json ? HITCALC_FORMAT_JSON : HITCALC_FORMAT_TEXT, &out.p,
          &dim))
    return report_error(s);
  std::cout << out.p;
  return 0;
}

// The degree is read off the polynomial.
int run_hit_test(std::size_t k, const std::string& poly,
                 const std::string& cert_path) {
  std::uint64_t degree = 0;
  int is_zero = 0;
  if (auto s = hitcalc_polynomial_degree(poly.c_str(), k, &degree, &is_zero))
    return report_error(s);
  if (is_zero) {
    std::cout << "0 is hit\n";
    if (!cert_path.empty()) {
      std::cerr << "hitcalc: no certificate for the zero polynomial\n";
      return kExitError;
    }
    return 0;
  }

  hitcalc_cohit* space = nullptr;
  if (auto s = hitcalc_cohit_create(k, degree, &space)) return report_error(s);
  int hit = 0;
  LibString cert;
  auto s = hitcalc_cohit_is_hit(space, poly.c_str(), &hit);
  if (!s && !cert_path.empty())
    s = hitcalc_cohit_certificate(space, poly.c_str(), &cert.p);
  hitcalc_cohit_destroy(space);
  if (s) return report_error(s);

  std::cout << poly << (hit ? " is hit" : " is not hit") << "\n";
  if (!cert_path.empty()) {
    std::ofstream f(cert_path, std::ios::binary);
    f << cert.p;
    if (!f) {
      std::cerr << "hitcalc: cannot write " << cert_path << "\n";
      return kExitError;
    }
  }
  return 0;
}

int run_certificate_verify(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "hitcalc: cannot read " << path << "\n";
    return kExitError;
  }
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  int holds = 0;
  int proves_hit = 0;
  if (auto s = hitcalc_certificate_verify(text.c_str(), &holds, &proves_hit))
    return report_error(s);
  if (!holds) {
    std::cout << "INVALID: identity does not hold\n";
    return kExitFailed;
  }
  std::cout << (proves_hit ? "VALID: target is hit\n"
                           : "VALID: target reduces to the stated residue\n");
  return 0;
}

int run_suite(std::size_t k, std::uint64_t d, const std::string& ledger,
                     bool json) {
  LibString out;
  int all_pass = 0;
  if (auto s = hitcalc_run_suite(
          k, d, ledger.empty() ? nullptr : ledger.c_str(),
          json ? HITCALC_FORMAT_JSON : HITCALC_FORMAT_TEXT, &out.p, &all_pass))
    return report_error(s);
  std::cout << out.p;
  return all_pass ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hit problem and GL_k invariants over the Steenrod algebra"};
  app.set_version_flag("--version", std::string(hitcalc_version()));
  app.require_subcommand(1);

  std::size_t k = 0;
  std::uint64_t d = 0;
  bool json = false;

  auto* cohit = app.add_subcommand("cohit", "Dimension and basis of the cohit space");
  cohit->add_option("--vars,-k", k, "Number of variables")->required();
  cohit->add_option("--degree,-d", d, "Degree")->required();
  cohit->add_flag("--json", json, "Structured output");

  std::string group = "gl";
  auto* inv = app.add_subcommand("invariants", "Invariant subspace under GL_k or S_k");
  inv->add_option("--vars,-k", k, "Number of variables")->required();
  inv->add_option("--degree,-d", d, "Degree")->required();
  inv->add_option("--group", group, "gl or sym")
      ->check(CLI::IsMember({"gl", "sym"}));
  inv->add_flag("--json", json, "Structured output");

  std::string poly;
  std::string cert_path;
  auto* hit = app.add_subcommand("hit-test", "Decide whether a polynomial is hit");
  hit->add_option("--vars,-k", k, "Number of variables")->required();
  hit->add_option("--poly", poly, "Homogeneous polynomial, e.g. \"(3,1,0)+(2,2,0)\"")
      ->required();
  hit->add_option("--certificate", cert_path, "Write a certificate to this file");

  std::string cert_file;
  auto* cert = app.add_subcommand("certificate", "Certificate tools");
  cert->require_subcommand(1);
  auto* verify = cert->add_subcommand("verify", "Check a certificate file");
  verify->add_option("file", cert_file, "Certificate JSON")->required();

  std::size_t suite_k = 5;
  std::uint64_t suite_d = 11;
  std::string ledger;
  auto* suite = app.add_subcommand("verify-paper", "Run the full degree-11 reproduction");
  suite->add_flag("--json", json, "Structured output");
  suite->add_option("--vars,-k", suite_k, "Number of variables")
      ->capture_default_str();
  suite->add_option("--degree,-d", suite_d, "Degree")->capture_default_str();
  suite->add_option("--ledger", ledger, "Identity ledger (default: bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (*cohit) return run_cohit(k, d, json);
  if (*inv) return run_invariants(k, d, group, json);
  if (*hit) return run_hit_test(k, poly, cert_path);
  if (*verify) return run_certificate_verify(cert_file);
  if (*suite) return run_suite(suite_k, suite_d, ledger, json);
  return kExitError;
}
