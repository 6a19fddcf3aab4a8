#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hallforge::cli {

/// Runs `hallforge <verify|enumerate|map|table> ...`. args excludes the
/// program name. Exit codes: 0 success, 1 a checked identity failed,
/// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker cap from HALLFORGE_THREADS, or hardware concurrency when unset.
/// Throws std::invalid_argument on a value that is not a positive integer.
unsigned thread_limit();

}  // namespace hallforge::cli
