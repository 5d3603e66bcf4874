#include "cechrec/error.hpp"

namespace cechrec {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptySample: return "EmptySample";
    case Errc::NotASubset: return "NotASubset";
    case Errc::EmptyWitnessSet: return "EmptyWitnessSet";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::CapTooLargeForMemory: return "CapTooLargeForMemory";
    case Errc::InsufficientDimCap: return "InsufficientDimCap";
    case Errc::VertexMapNotTotal: return "VertexMapNotTotal";
    case Errc::SourceTargetMismatch: return "SourceTargetMismatch";
    case Errc::EpsilonTooSmall: return "EpsilonTooSmall";
    case Errc::DensityTooLow: return "DensityTooLow";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case Errc::QTooSmall: return "QTooSmall";
  }
  return "Unknown";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::ParseError:
    case Errc::EmptySample:
    case Errc::NotASubset:
    case Errc::EmptyWitnessSet:
    case Errc::EmptyInput:
    case Errc::InsufficientDimCap:
    case Errc::EpsilonTooSmall:
    case Errc::DensityTooLow:
    case Errc::AlphaOutOfRange:
    case Errc::EpsilonOutOfRange:
    case Errc::QTooSmall:
      return true;
    default:
      return false;
  }
}

}  // namespace cechrec
