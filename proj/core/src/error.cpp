#include "covertower/error.hpp"

#include <cstdlib>
#include <string>

#include "covertower/config.hpp"

namespace covertower {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGenus: return "InvalidGenus";
    case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::RelatorNotTrivial: return "RelatorNotTrivial";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::InvalidIdentification: return "InvalidIdentification";
    case ErrorCode::ComplexMismatch: return "ComplexMismatch";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotARefinement: return "NotARefinement";
    case ErrorCode::IncompatibleTower: return "IncompatibleTower";
    case ErrorCode::SwitchViolation: return "SwitchViolation";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NonIntegerWeights: return "NonIntegerWeights";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::ConeViolation: return "ConeViolation";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::InvalidTrack: return "InvalidTrack";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

namespace {

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("COVERTOWER_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return fallback;
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t default_budget() { return budget_from_env(20'000'000); }

std::uint64_t default_degree_budget() { return budget_from_env(4096); }

}  // namespace covertower
