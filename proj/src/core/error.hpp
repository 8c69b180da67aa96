#pragma once

#include <stdexcept>
#include <string>

namespace ruled {

enum class ErrorCode {
  UnsupportedSurface,
  DimensionMismatch,
  NoBlowdown,
  NotNormalized,
  RankTooSmall,
  Window,
  Parse,
  Direction,
  Argument,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ruled
