#pragma once

#include <iosfwd>

namespace orbdual {

// exit codes: 0 ok, 1 mismatch, 2 invalid input, 3 internal inconsistency
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbdual
