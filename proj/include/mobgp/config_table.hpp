#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mobgp {

// Interning table for fixed-width configurations (sorted vertex-id arrays).
// Entries are numbered densely in insertion order. Open addressing with
// linear probing; not thread-safe for writes.
class ConfigTable {
 public:
  using Key = std::uint16_t;

  explicit ConfigTable(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return count_; }

  // Returns (index, inserted).
  std::pair<std::uint32_t, bool> insert(std::span<const Key> config);
  std::optional<std::uint32_t> find(std::span<const Key> config) const;

  std::span<const Key> at(std::uint32_t index) const {
    return {keys_.data() + static_cast<std::size_t>(index) * width_, width_};
  }

 private:
  std::uint64_t hash(std::span<const Key> config) const;
  bool equal(std::uint32_t index, std::span<const Key> config) const;
  void grow();

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Key> keys_;
  std::vector<std::uint32_t> slots_;  // index + 1; 0 = empty
  std::size_t mask_ = 0;
};

}  // namespace mobgp
