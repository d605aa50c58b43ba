#include "sternpoly/error.hpp"

namespace sternpoly {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter:
    case ErrorKind::AlphaOutOfRange: return 2;
    case ErrorKind::CapExceeded: return 3;
    case ErrorKind::NonConvergence: return 4;
    case ErrorKind::DivisionByZero: return 5;
    case ErrorKind::InternalInvariant:
    case ErrorKind::PrecisionTooLow: return 1;
  }
  return 1;
}

}  // namespace sternpoly
