#include "tangles/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

#include "tangles/error.hpp"

namespace tangles {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooFewNodes: return "TooFewNodes";
    case ErrorCode::kDegenerateAxis: return "DegenerateAxis";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kInvalidSelection: return "InvalidSelection";
    case ErrorCode::kNoDistinguishingCuts: return "NoDistinguishingCuts";
    case ErrorCode::kMissingAxisMetadata: return "MissingAxisMetadata";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kConfig: return "Config";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace log {
namespace {

const char* level_name(Level level) {
  switch (level) {
    case Level::kDebug: return "debug";
    case Level::kInfo: return "info";
    case Level::kWarning: return "warning";
    case Level::kError: return "error";
    case Level::kOff: return "off";
  }
  return "?";
}

struct State {
  std::atomic<Level> threshold{Level::kWarning};
  std::mutex mutex;
  Sink sink;
};

State& state() {
  static State s;
  return s;
}

void emit(Level level, const std::string& message) {
  State& s = state();
  if (level < s.threshold.load()) return;
  std::lock_guard<std::mutex> lock(s.mutex);
  if (s.sink) {
    s.sink(level, message);
  } else {
    std::cerr << "tangles " << level_name(level) << ": " << message << '\n';
  }
}

}  // namespace

void set_level(Level level) { state().threshold.store(level); }
Level level() { return state().threshold.load(); }

void set_sink(Sink sink) {
  State& s = state();
  std::lock_guard<std::mutex> lock(s.mutex);
  s.sink = std::move(sink);
}

void debug(const std::string& message) { emit(Level::kDebug, message); }
void info(const std::string& message) { emit(Level::kInfo, message); }
void warn(const std::string& message) { emit(Level::kWarning, message); }
void error(const std::string& message) { emit(Level::kError, message); }

}  // namespace log
}  // namespace tangles
