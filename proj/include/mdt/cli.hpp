#pragma once

#include <iosfwd>

namespace mdt::cli {

// Entry point shared by the binary and the tests.  Returns the process exit
// code: 0 success, 1 verification failure, 2 usage error, 3 resource ceiling.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdt::cli
