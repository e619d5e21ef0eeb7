#pragma once

#include <string>
#include <vector>

namespace lexidim::cli {

/// Exit codes: 0 success, 2 input error, 3 inconclusive (an enumeration cap
/// was hit).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconclusive = 3;

struct RunResult {
    int exit_code;
    std::string output;  // one JSON document, newline-terminated
};

/// Runs one command given argv without the program name, e.g.
/// {"adim", "path:5", "-k", "2"}. Never throws; errors come back as a JSON
/// error object with exit code 2.
RunResult run_command(const std::vector<std::string>& argv);

/// Process entry point: runs argv, writes the report to stdout, returns the
/// exit code.
int main_entry(int argc, char** argv);

}  // namespace lexidim::cli
