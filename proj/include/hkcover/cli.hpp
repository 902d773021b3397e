#pragma once

#include <iosfwd>

namespace hk {

/// Command-line entry point. Writes exactly one JSON document (or CSV table) to `out`
/// and diagnostics to `err`. Exit status 0 means success or VALID, 1 a validation
/// failure or INVALID result, 2 a usage problem.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hk
