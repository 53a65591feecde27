#include "tropcount/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string_view>

namespace tropcount {

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("TROPCOUNT_LOG");
        if (!env) return LogLevel::Off;
        std::string_view v(env);
        if (v == "debug" || v == "2") return LogLevel::Debug;
        if (v == "info" || v == "1") return LogLevel::Info;
        return LogLevel::Off;
    }();
    return level;
}

void log(LogLevel level, const std::string& message) {
    if (level == LogLevel::Off || static_cast<int>(level) > static_cast<int>(log_level())) return;
    std::cerr << "[tropcount] " << message << '\n';
}

}  // namespace tropcount
