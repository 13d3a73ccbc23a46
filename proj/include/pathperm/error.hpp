#pragma once

#include <stdexcept>
#include <string>

namespace pathperm {

enum class ErrorCode {
  InvalidInput,
  UnsupportedPattern,
  UnsupportedInput,
  NotInImage,
  ResourceGuard,
  CacheCorrupt,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the core library is reported through this exception; the
// C API maps the code onto a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pathperm
