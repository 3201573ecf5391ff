#pragma once

#include <stdexcept>
#include <string>

namespace zfl {

enum class ErrorCode {
  InvalidArgument,
  OutOfRange,
  CapExceeded,
  Parse,
  Io,
  Precondition,
};

// All library failures are reported through this type; the C layer maps
// `code()` onto its status enum.
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

}  // namespace zfl
