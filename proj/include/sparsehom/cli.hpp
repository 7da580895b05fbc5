#pragma once

#include <iosfwd>

namespace sparsehom {

/// Command-line entry point; returns the process exit code.
/// Exit codes: 0 success (or "found"), 1 "not-found" from detect-induced,
/// 2 input error, 3 internal-consistency failure.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace sparsehom
