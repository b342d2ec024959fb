#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "covertower/cover.hpp"
#include "covertower/homology.hpp"

namespace covertower {

/// Append-only table of canonical covers with their cell complexes. Ids are
/// assigned in insertion order and never reused; lookups take a shared lock
/// and may run concurrently, inserts take the exclusive lock.
class CoverRegistry {
 public:
  std::size_t intern(const CoverSpec& c);
  std::optional<std::size_t> find(const CoverSpec& c) const;
  /// Complex of c, built once and shared.
  ComplexPtr complex(const CoverSpec& c);
  CoverSpec cover(std::size_t id) const;
  std::size_t size() const;

  /// Process-wide instance used by the limit machinery.
  static CoverRegistry& global();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CoverSpec, std::size_t, CoverHash> index_;
  std::deque<CoverSpec> covers_;
  std::vector<ComplexPtr> complexes_;
};

}  // namespace covertower
