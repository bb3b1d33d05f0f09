#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordwork {

enum class ErrorCode {
  CycleError,
  UnknownElement,
  AmbiguousLeast,
  MalformedCode,
  PreconditionViolation,
  InvalidNode,
  EmptyBlock,
  NotIncreasing,
  NotTriRelated,
  BadLetter,
  WellFounded,
  InvalidWitness,
  InvalidWarp,
  NotAWave,
  InvalidSequence,
  MalformedLabel,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto a verdict without parsing
// message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ordwork
