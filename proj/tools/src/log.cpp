#include "wradon/app/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace wradon::app {

namespace {
std::atomic<int> g_level{static_cast<int>(LogLevel::info)};
std::mutex g_mutex;
std::ostream* g_stream = &std::cerr;

const char* tag(LogLevel l) {
    switch (l) {
        case LogLevel::debug: return "debug";
        case LogLevel::info: return "info";
        case LogLevel::warn: return "warn";
        case LogLevel::error: return "error";
    }
    return "info";
}
}  // namespace

void set_log_level(LogLevel level) { g_level = static_cast<int>(level); }
LogLevel log_level() { return static_cast<LogLevel>(g_level.load()); }

void set_log_stream(std::ostream* out) {
    std::lock_guard lock(g_mutex);
    g_stream = out ? out : &std::cerr;
}

void log(LogLevel level, std::string_view message) {
    if (static_cast<int>(level) < g_level.load()) return;
    std::lock_guard lock(g_mutex);
    *g_stream << '[' << tag(level) << "] " << message << '\n';
}

}  // namespace wradon::app
