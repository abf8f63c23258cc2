#pragma once

#include <iosfwd>

namespace exsq::cli {

/// Runs the command line tool. Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when a requested check fails and 2 on usage or
/// input errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace exsq::cli
