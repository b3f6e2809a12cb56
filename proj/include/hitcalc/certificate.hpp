#pragma once

// Hit certificates: an explicit identity
//
//   target + sum_j Sq^{i_j}(source_j) = residue,   i_j >= 1,
//
// checked by plain polynomial arithmetic. No linear algebra is involved in
// verification, so a certificate can be audited independently of the
// elimination that produced it.
//
// File format (JSON, keys in this order, polynomials in the shared text
// syntax):
//   {"vars":5,"degree":11,"target":"(11,0,0,0,0)",
//    "summands":[{"i":4,"source":"(7,0,0,0,0)"}],"residue":"0"}

#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/algebra.hpp"
#include "hitcalc/steenrod.hpp"

namespace hitcalc {

struct Summand {
  SquareIndex square;
  Polynomial source;

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct HitCertificate {
  std::size_t vars = 0;
  Exponent degree = 0;
  Polynomial target;
  std::vector<Summand> summands;
  Polynomial residue;

  bool proves_hit() const { return residue.is_zero(); }
  friend bool operator==(const HitCertificate&,
                         const HitCertificate&) = default;
};

// Throws Error(malformed_certificate) on arity or degree inconsistencies
// (including a summand with i = 0); otherwise reports whether the identity
// holds exactly.
bool verify_certificate(const HitCertificate& c);

std::string certificate_to_json(const HitCertificate& c);
// Throws Error(parse) on malformed JSON or polynomial text.
HitCertificate certificate_from_json(std::string_view text);

}  // namespace hitcalc
