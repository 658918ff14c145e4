#pragma once

// Command-line surface: dims | ame | spectrum | sweep | converge | density |
// verify, with stable machine-readable CSV/JSON outputs.  Exit codes:
// 0 success, 1 verification failure, 2 usage error.

#include <iosfwd>
#include <string>

#include "hextrap/symmetry.hpp"

namespace hextrap::cli {

// Resolve a sector name or content alias (BBB+, FFF-, ...).  The FFF+/FFF-
// aliases resolve to A2/B1 under the C2-character parity convention; a note
// about the source tables' conflicting fermion parity suffixes goes to
// `warn` when non-null.  Throws std::invalid_argument on unknown names.
const Sector& resolve_sector(std::string_view name, std::ostream* warn);

// Entry point used by main() and by the in-process CLI tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hextrap::cli
