#pragma once

#include <functional>
#include <string>

namespace tangles::log {

enum class Level { kDebug = 0, kInfo = 1, kWarning = 2, kError = 3, kOff = 4 };

using Sink = std::function<void(Level, const std::string&)>;

// Messages below the threshold are dropped. Default threshold is kWarning and
// the default sink writes to stderr.
void set_level(Level level);
Level level();

// Replaces the sink; passing an empty function restores the stderr sink.
void set_sink(Sink sink);

void debug(const std::string& message);
void info(const std::string& message);
void warn(const std::string& message);
void error(const std::string& message);

}  // namespace tangles::log
