#pragma once

#include <iosfwd>

namespace toruscm::cli {

// Exit codes: 0 success, 1 failed verification or --expect mismatch, 2 malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toruscm::cli
