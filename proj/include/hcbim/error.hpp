#pragma once

#include <stdexcept>
#include <string>

namespace hcbim {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  OrderMismatch,
  RankTooSmall,
  NeedMoreOrders,
  NotPureExponential,
  NonIntegerWeight,
  RankExceedsBound,
  InvalidGenerator,
  NonGenericWeight,
  RankMismatch,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the decision pipeline, the CLI) can map it without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hcbim
