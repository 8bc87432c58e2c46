#pragma once

#include <iosfwd>
#include <string_view>

namespace wradon::app {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };

void set_log_level(LogLevel level);
/// Defaults to std::cerr.
void set_log_stream(std::ostream* out);
LogLevel log_level();

/// One line to the log stream: "[level] message".
void log(LogLevel level, std::string_view message);

inline void log_info(std::string_view m) { log(LogLevel::info, m); }
inline void log_warn(std::string_view m) { log(LogLevel::warn, m); }
inline void log_error(std::string_view m) { log(LogLevel::error, m); }
inline void log_debug(std::string_view m) { log(LogLevel::debug, m); }

}  // namespace wradon::app
