#pragma once

// Memo stores for the search-tree solver: a direct-address table D over
// (u, v, k) with k = apex + 1 (0 = no apex), and a hash map over packed keys.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "polytri/bridges.hpp"

namespace polytri {

enum class MemoBackend { dense, hash };

inline const char* to_string(MemoBackend b) { return b == MemoBackend::dense ? "dense" : "hash"; }

inline constexpr Cost kUnsolved = -1;
inline constexpr std::size_t kDefaultDenseCap = 2000;

/**
 * Conceptually an n x n x (n+1) array D. Only rows (u, v, *) of discovered
 * bridges are ever materialized and initialized to the sentinel, so setup
 * costs O(n) rows of n+1 cells. A per-(u,v) row index locates them; any
 * access to a row that was not initialized is a logic error and throws.
 */
class DenseMemo {
 public:
  DenseMemo(const Polygon& poly, const BridgeTable& table, std::size_t cap = kDefaultDenseCap)
      : n_(poly.size()) {
    if (n_ > cap) {
      throw InvalidInput("dense memo refused: n = " + std::to_string(n_) + " exceeds cap " + std::to_string(cap));
    }
    row_of_.assign(n_ * n_, kNoRow);
    const std::size_t width = n_ + 1;
    values_ = std::make_unique<Cost[]>(table.size() * width);
    choices_ = std::make_unique<std::uint8_t[]>(table.size() * width);
    for (std::size_t r = 0; r < table.size(); ++r) {
      const Bridge& b = table.bridges()[r];
      row_of_[b.u * n_ + b.v] = static_cast<std::uint32_t>(r);
      for (std::size_t k = 0; k < width; ++k) values_[r * width + k] = kUnsolved;
    }
    initialized_cells_ = table.size() * width;
  }

  bool solved(const Cone& c) const { return values_[cell(c)] != kUnsolved; }
  Cost value(const Cone& c) const {
    Cost v = values_[cell(c)];
    if (v == kUnsolved) throw std::logic_error("read of an unsolved memo cell");
    return v;
  }
  std::uint8_t choice(const Cone& c) const { return choices_[cell(c)]; }

  void store(const Cone& c, Cost value, std::uint8_t choice) {
    std::size_t at = cell(c);
    if (values_[at] != kUnsolved) throw std::logic_error("memo cell written twice");
    values_[at] = value;
    choices_[at] = choice;
    ++entries_;
  }

  std::size_t entries() const { return entries_; }
  std::size_t initialized_cells() const { return initialized_cells_; }
  static constexpr MemoBackend backend() { return MemoBackend::dense; }

 private:
  static constexpr std::uint32_t kNoRow = ~std::uint32_t{0};

  std::size_t cell(const Cone& c) const {
    std::uint32_t row = row_of_[std::size_t{c.u} * n_ + c.v];
    if (row == kNoRow) {
      throw std::logic_error("dense memo access outside bridge rows at (" + std::to_string(c.u) + "," +
                             std::to_string(c.v) + ")");
    }
    return std::size_t{row} * (n_ + 1) + (c.apex + 1u);
  }

  std::size_t n_;
  std::vector<std::uint32_t> row_of_;
  std::unique_ptr<Cost[]> values_;
  std::unique_ptr<std::uint8_t[]> choices_;
  std::size_t initialized_cells_ = 0;
  std::size_t entries_ = 0;
};

class HashMemo {
 public:
  HashMemo(const Polygon& poly, const BridgeTable&) { map_.reserve(4 * poly.size()); }

  bool solved(const Cone& c) const { return map_.count(cone_key(c)) != 0; }
  Cost value(const Cone& c) const { return find(c).value; }
  std::uint8_t choice(const Cone& c) const { return find(c).choice; }

  void store(const Cone& c, Cost value, std::uint8_t choice) {
    auto [it, inserted] = map_.try_emplace(cone_key(c), Entry{value, choice});
    if (!inserted) throw std::logic_error("memo entry written twice");
  }

  std::size_t entries() const { return map_.size(); }
  static constexpr MemoBackend backend() { return MemoBackend::hash; }

 private:
  struct Entry {
    Cost value;
    std::uint8_t choice;
  };

  const Entry& find(const Cone& c) const {
    auto it = map_.find(cone_key(c));
    if (it == map_.end()) throw std::logic_error("read of an unsolved memo entry");
    return it->second;
  }

  std::unordered_map<std::uint64_t, Entry> map_;
};

}  // namespace polytri
