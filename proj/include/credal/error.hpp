#pragma once

#include <stdexcept>
#include <string>

namespace credal {

enum class ErrorCode {
  MalformedInterval,
  OutOfAmbient,
  AmbientMismatch,
  UnboundedAmbient,
  NotInAlgebra,
  Unnormalizable,
  NotAPartition,
  NotARefinement,
  EmptySet,
  ZeroMassConditioning,
  UnsupportedRule,
  TargetMismatch,
  ClosureTooLarge,
  NotSubordinate,
  NoConvergence,
  CapExceeded,
  BadRatio,
  Exhausted,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace credal
