#pragma once

#include <string>

namespace tropcount {

enum class LogLevel { Off = 0, Info = 1, Debug = 2 };

/// Read once from TROPCOUNT_LOG ("info", "debug", or a number); default off.
LogLevel log_level();

/// Writes "[tropcount] message" to stderr when level is enabled.
void log(LogLevel level, const std::string& message);

}  // namespace tropcount
