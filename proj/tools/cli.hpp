#pragma once

#include <iosfwd>

namespace cubetess::cli {

/// Entry point behind the cubetess executable. Returns the process exit
/// code: 0 on success, 1 when `verify` finds failures, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubetess::cli
