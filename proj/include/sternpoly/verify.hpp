#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sternpoly/error.hpp"
#include "sternpoly/report.hpp"

namespace sternpoly {

struct VerifyConfig {
  std::vector<long> t_list{2, 3};
  std::vector<long> k_list{1, 2, 3};
  std::size_t depth = 5;
  std::size_t order = 256;
  unsigned precision = 60;
  std::string suite = "all";  ///< stern | series | contfrac | mahler | all
  unsigned jobs = 0;          ///< 0 picks the hardware concurrency
};

struct VerifyOutcome {
  CheckReport report;
  /// First resource or convergence error in grid order; the report then holds
  /// every check completed before it.
  std::optional<ErrorKind> error;
};

/// Validates the whole grid up front (InvalidParameter before any work), then
/// runs every suite check at every (t, k). The report order depends only on
/// the configuration.
VerifyOutcome run_verify(const VerifyConfig& config);

}  // namespace sternpoly
