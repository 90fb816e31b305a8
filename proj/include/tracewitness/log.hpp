// log.hpp - stderr diagnostics gated by TRACEWITNESS_LOG (quiet|info|debug)
#pragma once

#include <string>

namespace tracewitness {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level();
void set_log_level(LogLevel level);

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace tracewitness
