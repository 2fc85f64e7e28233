#pragma once

#include <ostream>

namespace hall::cli {

/// Entry point of the `hall` tool. Exit codes: 0 success, 1 a check failed,
/// 2 usage or input error (including products leaving the universe),
/// 3 enumeration cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hall::cli
