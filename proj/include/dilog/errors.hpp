#pragma once

#include <stdexcept>
#include <string>

namespace dilog {

enum class ErrorCode {
  InvalidArgument,
  NoPositiveRoot,
  NoInteriorRoot,
  InvalidExponents,
  PrecisionExhausted,
  UnknownName,
  Parse,
};

/// Base for all library failures that callers are expected to handle.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dilog
