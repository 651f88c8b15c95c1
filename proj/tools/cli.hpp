#pragma once

#include <ostream>

namespace nilp {

/// Runs one command line. Exit codes: 0 pass, 1 mathematical failure
/// (a certificate is printed), 2 input or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilp
