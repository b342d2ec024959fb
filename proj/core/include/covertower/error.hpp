#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covertower {

enum class ErrorCode {
  InvalidGenus,
  GeneratorOutOfRange,
  DimensionMismatch,
  BadDegree,
  RelatorNotTrivial,
  NotTransitive,
  SearchBudgetExceeded,
  GenusMismatch,
  InvalidIdentification,
  ComplexMismatch,
  NotACycle,
  NotARefinement,
  IncompatibleTower,
  SwitchViolation,
  NegativeWeight,
  NonIntegerWeights,
  BaseMismatch,
  ConeViolation,
  KindMismatch,
  InvalidAutomorphism,
  InvalidTrack,
  InvalidDocument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covertower
