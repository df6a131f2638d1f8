#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bss/universe.hpp"

namespace bss {

/// An equivalence relation on {0..n-1} held as disjoint, non-empty blocks.
///
/// Blocks are canonical: each block is sorted and blocks are ordered by their
/// smallest element, so two partitions are equal iff they describe the same
/// relation.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless the blocks are non-empty, disjoint
  /// and cover {0..n-1}.
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  /// Groups elements carrying the same class key.
  static Partition from_keys(std::span<const std::size_t> keys);
  static Partition universal(std::size_t n);
  static Partition discrete(std::size_t n);

  std::size_t element_count() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }
  bool related(std::size_t a, std::size_t b) const { return block_of_[a] == block_of_[b]; }

  /// Every block of *this lies inside a block of `coarser`; the same as
  /// inclusion of the underlying relations.
  bool refines(const Partition& coarser) const;

  /// Common refinement: a, b related iff related in both.
  Partition meet(const Partition& other) const;

  std::string to_string(const Universe& u) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

}  // namespace bss
