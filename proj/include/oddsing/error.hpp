#pragma once

#include <stdexcept>
#include <string>

namespace oddsing {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  Precondition = 1,  // a mathematical precondition is violated
  Usage = 2,         // malformed input
  Consistency = 3,   // two independent computations disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace oddsing
