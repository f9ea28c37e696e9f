#pragma once

#include <iosfwd>

namespace recurlab {

/// Entry point of the command-line tool; argv[0] is the program name.
/// Returns 0 on success, 1 on usage or evaluation errors, 2 on a
/// mathematically meaningful negative (singular recovery, counterexamples).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace recurlab
