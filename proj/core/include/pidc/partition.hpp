#pragma once

#include <cstdint>
#include <vector>

#include "pidc/errors.hpp"

namespace pidc {

/// Partition of the target alphabet {0..n-1} into disjoint non-empty blocks
/// covering the whole alphabet.
///
/// Canonical form is enforced on construction: members ascending within each
/// block, blocks ordered by their smallest member. Two partitions compare
/// equal iff they induce the same grouping.
class Partition {
 public:
  Partition() = default;

  /// Validates disjointness, coverage and non-emptiness, then canonicalizes.
  Partition(std::vector<std::vector<uint16_t>> blocks, std::size_t alphabet_size);

  static Partition discrete(std::size_t alphabet_size);
  static Partition trivial(std::size_t alphabet_size);

  std::size_t alphabet_size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<uint16_t>>& blocks() const { return blocks_; }
  const std::vector<uint16_t>& block(std::size_t i) const { return blocks_[i]; }
  uint16_t block_of(uint16_t atom) const { return block_of_[atom]; }

  bool is_discrete() const { return blocks_.size() == block_of_.size(); }
  bool is_trivial() const { return blocks_.size() == 1; }

  /// True if every block of `finer` lies inside a single block of *this.
  bool coarsens(const Partition& finer) const;

  bool operator==(const Partition& other) const { return blocks_ == other.blocks_; }

 private:
  std::vector<std::vector<uint16_t>> blocks_;
  std::vector<uint16_t> block_of_;
};

}  // namespace pidc
