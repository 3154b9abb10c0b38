#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace avsa::cli {

/// Exit codes of run().
constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kInputError = 2;

/// Runs one command (arguments without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avsa::cli
