#pragma once

#include <stdexcept>
#include <string>

namespace hitcalc {

enum class ErrorCode {
  invalid_argument = 1,
  parse,
  arity_mismatch,
  degree_mismatch,
  overflow,
  malformed_certificate,
  io,
};

// Base of every exception thrown by the library. The C API maps `code()`
// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hitcalc
