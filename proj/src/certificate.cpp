#include "hitcalc/certificate.hpp"

#include <json.hpp>

#include "hitcalc/error.hpp"

namespace hitcalc {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::malformed_certificate, "malformed certificate: " + why);
}

void check_poly(const Polynomial& p, std::size_t vars, Exponent degree,
                const char* what) {
  if (p.arity() != vars) malformed(std::string(what) + " has wrong arity");
  if (!p.is_homogeneous_of(degree))
    malformed(std::string(what) + " is not homogeneous of degree " +
              std::to_string(degree));
}

}  // namespace

bool verify_certificate(const HitCertificate& c) {
  if (c.vars == 0) malformed("vars must be positive");
  check_poly(c.target, c.vars, c.degree, "target");
  check_poly(c.residue, c.vars, c.degree, "residue");
  Polynomial lhs = c.target;
  for (const auto& s : c.summands) {
    if (s.square.value == 0) malformed("summand uses Sq^0");
    if (s.square.value > c.degree) malformed("summand square exceeds degree");
    check_poly(s.source, c.vars, c.degree - s.square.value, "summand source");
    lhs += sq_poly(s.square, s.source);
  }
  return lhs == c.residue;
}

std::string certificate_to_json(const HitCertificate& c) {
  nlohmann::ordered_json j;
  j["vars"] = c.vars;
  j["degree"] = c.degree;
  j["target"] = to_string(c.target);
  auto summands = nlohmann::ordered_json::array();
  for (const auto& s : c.summands) {
    nlohmann::ordered_json e;
    e["i"] = s.square.value;
    e["source"] = to_string(s.source);
    summands.push_back(std::move(e));
  }
  j["summands"] = std::move(summands);
  j["residue"] = to_string(c.residue);
  return j.dump(2) + "\n";
}

HitCertificate certificate_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("certificate JSON: ") + e.what());
  }
  try {
    HitCertificate c;
    c.vars = j.at("vars").get<std::size_t>();
    c.degree = j.at("degree").get<Exponent>();
    c.target = parse_polynomial(j.at("target").get<std::string>(), c.vars);
    for (const auto& e : j.at("summands")) {
      c.summands.push_back(
          {SquareIndex(e.at("i").get<Exponent>()),
           parse_polynomial(e.at("source").get<std::string>(), c.vars)});
    }
    c.residue = parse_polynomial(j.at("residue").get<std::string>(), c.vars);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("certificate fields: ") + e.what());
  }
}

}  // namespace hitcalc
