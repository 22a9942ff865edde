#pragma once

#include <iosfwd>

namespace waring::cli {

// Parses argv and runs the selected subcommand, writing the report to the
// requested destination. Exit status: 0 success, 1 validation error,
// 2 computation error (capacity refusal, non-convergence).
int run(int argc, const char* const* argv);

}  // namespace waring::cli
