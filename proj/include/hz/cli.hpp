#pragma once

#include <string>
#include <vector>

namespace hz::cli {

enum class Format { plain, csv, json };

/// Exit codes for scripted use.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagree = 2;

struct Output {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Runs one command line (args[0] is the program name) and captures its output.
/// Environment: HZ_FORCE_N raises the size guardrails like --force-n.
Output run(const std::vector<std::string> &args);

} // namespace hz::cli
