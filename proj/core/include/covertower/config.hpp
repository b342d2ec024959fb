#pragma once

#include <cstdint>

namespace covertower {

/// Default node budget for backtracking searches and product constructions.
/// The environment variable COVERTOWER_BUDGET overrides it when set to a
/// positive integer.
std::uint64_t default_budget();

/// Largest cover degree a product construction (characteristic refinement)
/// may reach before giving up. COVERTOWER_BUDGET overrides it as well.
std::uint64_t default_degree_budget();

}  // namespace covertower
