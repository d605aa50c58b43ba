#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sternpoly {

enum class ErrorKind {
  InvalidParameter,
  CapExceeded,
  NonConvergence,
  AlphaOutOfRange,
  DivisionByZero,
  InternalInvariant,
  PrecisionTooLow,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Process exit code for an error kind, as used by the command line tool.
/// 0 all-pass, 1 check failure, 2 bad input, 3 cap exceeded,
/// 4 non-convergence, 5 evaluation singularity.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace sternpoly
