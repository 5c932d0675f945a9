//
// Project     : mint
// Module      : errors
// Description : error taxonomy shared by all modules
//
#pragma once

#include <stdexcept>
#include <string>

namespace mint {

enum class ErrorCode {
  EmptySpace,
  NonpositiveWeight,
  SpaceMismatch,
  ExponentOutOfRange,
  SlotOutOfRange,
  SumNotOne,
  EntryAboveOne,
  TwoNonpositive,
  LengthMismatch,
  DegenerateHull,
  EmptySet,
  SpaceTooLarge,
  NotGoodTuple,
  CombinationMismatch,
  EpsilonTooLarge,
  GridTooSmall,
  ConfigInvalid,
  GeometryMissing,
  InvalidInput,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace mint
