#pragma once

#include <stdexcept>
#include <string>

namespace esgrid {

enum class ErrorCode {
  kInvalidArgument,
  kVerticalLine,
  kEmptySet,
  kDuplicatePoint,
  kDuplicateX,
  kNotGeneralPosition,
  kTooLarge,
  kParseError,
  kConstructionFailed,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (notably the CLI) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace esgrid
