#pragma once

#include <iosfwd>

namespace vidp {

// Entry point shared by the `vidp` executable and the tests. Returns 0 on
// success, 2 on usage errors and 1 on data errors; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vidp
