#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indsets::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (argv[0] excluded).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace indsets::cli
