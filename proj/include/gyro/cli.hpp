#pragma once

#include <ostream>

namespace gyro {

/// Exit codes: 0 success, 1 validation or analysis failure, 2 usage or parse
/// error.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gyro
