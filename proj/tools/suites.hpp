#pragma once

#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace covertower::suites {

const std::vector<std::string>& names();

/// One checked case. `rows` are table lines (tab-separated, no newline);
/// `failure` describes the first law that broke.
struct CaseResult {
  std::vector<std::string> rows;
  std::optional<std::string> failure;
};

struct SuiteResult {
  bool ok = true;
  std::string table;
  std::size_t cases = 0;
  /// First failing case in canonical order, replayable with replay().
  std::optional<io::Json> counterexample;
};

/// Cases are the covers of degree 1..max_degree in enumeration order; they
/// run on up to `jobs` threads and are merged in order. Throws
/// InvalidDocument for an unknown suite.
SuiteResult run(const std::string& suite, int genus, int max_degree, int jobs);

/// Re-runs the single case stored in a counterexample document.
CaseResult replay(const io::Json& counterexample);

}  // namespace covertower::suites
