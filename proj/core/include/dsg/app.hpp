#pragma once

#include <iosfwd>

namespace dsg {

/// Entry point of the dsgbound tool. Reports go to `out`, diagnostics to
/// `err`. Exit codes: 0 success, 1 hypothesis failed or not established,
/// 2 parse error, 3 unsupported input, 4 resource cap exceeded.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsg
