#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mpemba/validation.hpp"

namespace mpemba::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kNumericalFailure = 2 };

// Injection points used by tests; production runs leave them empty.
struct Hooks {
  PropagateFn propagator;
};

// Runs one invocation. args excludes the program name. CSV goes to --output
// (or `out` when omitted or "-"); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace mpemba::cli
