#include "tracewitness/log.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string_view>

namespace tracewitness {

namespace {

std::optional<LogLevel>& override_level() {
  static std::optional<LogLevel> level;
  return level;
}

LogLevel env_level() {
  const char* raw = std::getenv("TRACEWITNESS_LOG");
  if (raw == nullptr) return LogLevel::Quiet;
  const std::string_view v(raw);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  return LogLevel::Quiet;
}

}  // namespace

LogLevel log_level() {
  if (override_level()) return *override_level();
  static const LogLevel cached = env_level();
  return cached;
}

void set_log_level(LogLevel level) { override_level() = level; }

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) {
    std::cerr << "tracewitness: " << msg << "\n";
  }
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::Debug) {
    std::cerr << "tracewitness: " << msg << "\n";
  }
}

}  // namespace tracewitness
