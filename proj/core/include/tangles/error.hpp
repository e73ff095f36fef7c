#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

enum class ErrorCode {
  kEmptySide,
  kLengthMismatch,
  kUniverseMismatch,
  kTooLarge,
  kTooFewNodes,
  kDegenerateAxis,
  kBadParams,
  kInvalidSelection,
  kNoDistinguishingCuts,
  kMissingAxisMetadata,
  kParse,
  kConfig,
  kIo,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this type; `code()` tells callers
// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tangles
