#pragma once

#include <ostream>

namespace spg {

/// Exit codes: 0 success or PASS, 1 FAIL, 2 usage or input error, 3 INCONCLUSIVE.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace spg
