#pragma once

#include <ostream>

namespace unisets::cli {

/// Parses argv and runs one subcommand; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unisets::cli
