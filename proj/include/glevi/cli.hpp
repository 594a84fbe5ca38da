#pragma once

#include <ostream>

namespace glevi {

/// Runs the command line tool. Results go to `out`, diagnostics and the
/// human-readable report to `err`. Returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glevi
