#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arnold {

enum class ErrorCode {
  ZeroEntry,
  RepeatedAbsValue,
  AbsValueOutOfRange,
  MalformedCycleForm,
  MalformedCudCycleForm,
  Overflow,
  IllegalFlip,
  SizeCapExceeded,
  IndexOutOfRange,
  RankOutOfRange,
  MalformedSequence,
  MalformedCycle,
  NotInFamily,
  MissingPeak,
  UnknownCheck,
  UnknownFamily,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type; code() lets
// callers branch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arnold
