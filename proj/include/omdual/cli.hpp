#pragma once

#include <iosfwd>

namespace omdual::cli {

// Exit codes: 0 success / property holds, 1 property fails, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omdual::cli
