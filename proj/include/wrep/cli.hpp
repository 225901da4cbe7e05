#pragma once

#include <iosfwd>

namespace wrep {

/// Entry point of the command-line tool. Exit codes: 0 yes or pass, 1 no or
/// fail (with a certificate), 2 input or usage error, 3 unknown or partial.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wrep
