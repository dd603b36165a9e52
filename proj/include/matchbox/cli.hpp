#pragma once

#include <iosfwd>

namespace matchbox::cli {

// Entry point shared by the matchbox binary and the tests. Exit status:
// 0 = success / all checks pass, 1 = a check failed (counterexample or
// failed verification), 2 = usage, input or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace matchbox::cli
