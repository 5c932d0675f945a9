#include "mint/errors.hpp"

namespace mint {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::EntryAboveOne: return "EntryAboveOne";
    case ErrorCode::TwoNonpositive: return "TwoNonpositive";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::NotGoodTuple: return "NotGoodTuple";
    case ErrorCode::CombinationMismatch: return "CombinationMismatch";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::GeometryMissing: return "GeometryMissing";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace mint
