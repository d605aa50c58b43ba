#pragma once

#include <iosfwd>

namespace sternpoly {

/// Entry point of the `sternpoly` tool. Returns the process exit code:
/// 0 all-pass, 1 check failure, 2 bad input, 3 cap exceeded,
/// 4 non-convergence, 5 evaluation singularity.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sternpoly
