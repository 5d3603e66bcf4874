#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cechrec {

enum class Errc {
  InvalidArgument,
  ParseError,
  EmptySample,
  NotASubset,
  EmptyWitnessSet,
  EmptyInput,
  CapTooLargeForMemory,
  InsufficientDimCap,
  VertexMapNotTotal,
  SourceTargetMismatch,
  EpsilonTooSmall,
  DensityTooLow,
  AlphaOutOfRange,
  EpsilonOutOfRange,
  QTooSmall,
};

std::string_view to_string(Errc code) noexcept;

// Validation errors are caller mistakes or failed hypotheses; the CLI maps
// them to exit status 2. Everything else is an internal error.
bool is_validation_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cechrec
