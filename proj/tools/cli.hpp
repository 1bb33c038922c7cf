#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modchar::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "modchar/1";

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsageError = 2, kInputError = 3 };

/// Runs the modchar command line on `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace modchar::cli
