#include "mobgp/config_table.hpp"

#include "mobgp/error.hpp"

#include <algorithm>

namespace mobgp {

ConfigTable::ConfigTable(std::size_t width) : width_(width) {
  if (width == 0) throw Error(ErrorCode::invalid_argument, "ConfigTable: width must be positive");
  slots_.assign(1024, 0);
  mask_ = slots_.size() - 1;
}

std::uint64_t ConfigTable::hash(std::span<const Key> config) const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (Key k : config) {
    h ^= k + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  // splitmix64 finaliser
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBull;
  h ^= h >> 31;
  return h;
}

bool ConfigTable::equal(std::uint32_t index, std::span<const Key> config) const {
  const Key *stored = keys_.data() + static_cast<std::size_t>(index) * width_;
  return std::equal(config.begin(), config.end(), stored);
}

std::optional<std::uint32_t> ConfigTable::find(std::span<const Key> config) const {
  for (std::size_t slot = hash(config) & mask_;; slot = (slot + 1) & mask_) {
    const std::uint32_t entry = slots_[slot];
    if (entry == 0) return std::nullopt;
    if (equal(entry - 1, config)) return entry - 1;
  }
}

std::pair<std::uint32_t, bool> ConfigTable::insert(std::span<const Key> config) {
  if (config.size() != width_) throw Error(ErrorCode::internal, "ConfigTable: width mismatch");
  if (2 * (count_ + 1) > slots_.size()) grow();
  std::size_t slot = hash(config) & mask_;
  for (;; slot = (slot + 1) & mask_) {
    const std::uint32_t entry = slots_[slot];
    if (entry == 0) break;
    if (equal(entry - 1, config)) return {entry - 1, false};
  }
  const auto index = static_cast<std::uint32_t>(count_++);
  keys_.insert(keys_.end(), config.begin(), config.end());
  slots_[slot] = index + 1;
  return {index, true};
}

void ConfigTable::grow() {
  std::vector<std::uint32_t> bigger(slots_.size() * 2, 0);
  const std::size_t mask = bigger.size() - 1;
  for (std::uint32_t index = 0; index < count_; ++index) {
    std::size_t slot = hash(at(index)) & mask;
    while (bigger[slot] != 0) slot = (slot + 1) & mask;
    bigger[slot] = index + 1;
  }
  slots_ = std::move(bigger);
  mask_ = mask;
}

}  // namespace mobgp
