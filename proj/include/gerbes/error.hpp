#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gerbes {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NotAComplexStructure,
  TypeConditionFailed,
  TorusMismatch,
  NotInSubgroup,
  InternalMismatch,
  ClosedFormMismatch,
  FirstObstructionNonzero,
  MalformedRational,
  NonIncreasingIndices,
  BadDimensions,
  MalformedProblem,
  UnknownCommand,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code and the module that
// raised it; the CLI maps these to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& what)
      : std::runtime_error(what), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace gerbes
