#pragma once

#include <ostream>
#include <span>
#include <string>

namespace gbkit::cli {

/// Runs one command line (without the program name).
///
/// Exit codes: 0 success, 1 domain error (unreachable target, wrong damping
/// regime, infinite solution set, ...), 2 usage or parse error. Exit-2 paths
/// never start a computation. Results go to `out` (or to --output), and
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace gbkit::cli
