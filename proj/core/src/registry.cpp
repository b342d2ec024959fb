#include "covertower/registry.hpp"

#include <mutex>

namespace covertower {

std::size_t CoverRegistry::intern(const CoverSpec& c) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = index_.find(c); it != index_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = index_.emplace(c, covers_.size());
  if (inserted) {
    covers_.push_back(c);
    complexes_.push_back(nullptr);
  }
  return it->second;
}

std::optional<std::size_t> CoverRegistry::find(const CoverSpec& c) const {
  std::shared_lock lock(mutex_);
  if (auto it = index_.find(c); it != index_.end()) return it->second;
  return std::nullopt;
}

ComplexPtr CoverRegistry::complex(const CoverSpec& c) {
  const auto id = intern(c);
  {
    std::shared_lock lock(mutex_);
    if (complexes_[id]) return complexes_[id];
  }
  auto k = make_complex(c);
  std::unique_lock lock(mutex_);
  if (!complexes_[id]) complexes_[id] = std::move(k);
  return complexes_[id];
}

CoverSpec CoverRegistry::cover(std::size_t id) const {
  std::shared_lock lock(mutex_);
  return covers_.at(id);
}

std::size_t CoverRegistry::size() const {
  std::shared_lock lock(mutex_);
  return covers_.size();
}

CoverRegistry& CoverRegistry::global() {
  static CoverRegistry r;
  return r;
}

}  // namespace covertower
