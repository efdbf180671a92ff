#pragma once

#include <iosfwd>

namespace lrb {

// 0 ok, 1 invalid input, 2 internal invariant violation
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lrb
