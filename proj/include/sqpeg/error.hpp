#pragma once

#include <stdexcept>
#include <string>

namespace sqpeg {

enum class ErrorCode {
  invalid_input,
  precondition,
  resolution_insufficient,
  io,
  internal,
};

// Every failure raised by the library. The code drives CLI exit status.
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

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::precondition, what);
}

}  // namespace sqpeg
