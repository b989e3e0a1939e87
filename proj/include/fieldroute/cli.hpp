#pragma once

namespace fieldroute {

// Command line front end (validate / plan / bench). Returns the process
// exit code: 0 success, 1 planning infeasible, 2 bad input or arguments.
int run_cli(int argc, const char* const* argv);

}  // namespace fieldroute
