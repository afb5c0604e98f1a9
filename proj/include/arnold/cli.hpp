#pragma once

#include <ostream>

namespace arnold {

// Entry point of the arnold tool. Exit status: 0 success, 1 a verification
// check failed, 2 usage or runtime error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arnold
