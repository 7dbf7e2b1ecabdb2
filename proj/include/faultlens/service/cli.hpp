#pragma once

/// @file cli.hpp
/// @brief The `faultlens` command line.
///
///     faultlens [--config FILE] [--seed N] [--format text|json|lines] COMMAND
///
///     analyze FILE [--hypotheses 1,2,...]   every test's partition and the optimal test
///     simulate FILE --fault N [--test LABEL]
///     study score --responses FILE [--items FILE]
///     study baseline [--items FILE] [--samples N]
///     study stats --records FILE [--exclude P,...] [--max-mean-seconds S]
///     study simulate --kind random|optimal --group G [--participants N] [--items FILE]
///     lens run [--no-judge] [--ledger FILE]
///     lens judge [--ledger FILE]
///     lens report [--ledger FILE] [--alpha A]
///     serve [--host H] [--port P] [--data-dir DIR]
///
/// Exit status: 0 on success, 1 when lens cells failed, 2 for usage, parse
/// and validation errors, 3 for I/O and transport failures.

#include <ostream>
#include <string>
#include <vector>

namespace faultlens::service {

/// Runs one command line; `args` excludes the program name.
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faultlens::service
