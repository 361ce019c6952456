#pragma once

#include <stdexcept>
#include <string>

namespace zsl {

enum class Errc {
  EmptyModuli,
  ModulusTooSmall,
  OrderCapExceeded,
  RankMismatch,
  IndexOutOfRange,
  ParseError,
  ElementOutOfGroup,
  ZeroElementRejected,
  NotASubsequence,
  TooLargeForOracle,
  UnknownLemmaId,
};

const char* to_string(Errc code);

/// All failures surface as this exception; `code()` identifies the condition.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zsl
