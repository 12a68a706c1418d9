#pragma once

#include <iosfwd>

namespace swrbd::cli {

/// Entry point for the swrbd command line tool. Exit codes: 0 success,
/// 1 domain/validation failure, 2 usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swrbd::cli
