#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vw::cli {

/// Runs one subcommand. args excludes the program name.
/// Exit codes: 0 success, 1 usage error, 2 computation failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker-pool size for sweeps: VW_THREADS when set, hardware concurrency otherwise.
int worker_count();

}  // namespace vw::cli
