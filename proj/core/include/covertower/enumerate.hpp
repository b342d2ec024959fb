#pragma once

#include <cstdint>
#include <vector>

#include "covertower/config.hpp"
#include "covertower/cover.hpp"

namespace covertower {

struct EnumerateOptions {
  /// Maximum number of coset-table definitions tried before giving up with
  /// SearchBudgetExceeded.
  std::uint64_t budget = default_budget();
  /// Number of worker threads. Subtrees of the search are independent; the
  /// merged output is identical to a sequential run.
  int jobs = 1;
};

/// All connected pointed covers of degree `degree` (equivalently, all
/// subgroups of index `degree`), one canonical representative each, sorted
/// by permutation tuple.
std::vector<CoverSpec> enumerate_covers(const Surface& base, int degree,
                                        const EnumerateOptions& options = {});

/// Covers of every degree 1..max_degree, concatenated in degree order.
std::vector<CoverSpec> enumerate_covers_up_to(const Surface& base,
                                              int max_degree,
                                              const EnumerateOptions& options = {});

}  // namespace covertower
