#pragma once

#include <ostream>

namespace bss::cli {

// Exit codes: 0 ok, 1 other (I/O, usage), 2 parse, 3 consistency,
// 4 domain/parameter, 5 weights.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bss::cli
