#include "pidc/partition.hpp"

#include <algorithm>

namespace pidc {

Partition::Partition(std::vector<std::vector<uint16_t>> blocks, std::size_t alphabet_size) {
  if (alphabet_size == 0) raise(errc::empty_alphabet, "partition over an empty alphabet");
  block_of_.assign(alphabet_size, UINT16_MAX);
  for (auto& b : blocks) {
    if (b.empty()) raise(errc::invalid_partition, "empty block");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      raise(errc::invalid_partition, "repeated member within a block");
    for (uint16_t atom : b) {
      if (atom >= alphabet_size) raise(errc::invalid_partition, "member outside the alphabet");
      if (block_of_[atom] != UINT16_MAX) raise(errc::invalid_partition, "blocks overlap");
      block_of_[atom] = 0;  // provisional; reassigned below
    }
  }
  for (std::size_t atom = 0; atom < alphabet_size; ++atom) {
    if (block_of_[atom] == UINT16_MAX)
      raise(errc::invalid_partition, "blocks do not cover the alphabet");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (uint16_t atom : blocks_[i]) block_of_[atom] = static_cast<uint16_t>(i);
}

Partition Partition::discrete(std::size_t alphabet_size) {
  std::vector<std::vector<uint16_t>> blocks(alphabet_size);
  for (std::size_t i = 0; i < alphabet_size; ++i) blocks[i] = {static_cast<uint16_t>(i)};
  return Partition(std::move(blocks), alphabet_size);
}

Partition Partition::trivial(std::size_t alphabet_size) {
  std::vector<uint16_t> all(alphabet_size);
  for (std::size_t i = 0; i < alphabet_size; ++i) all[i] = static_cast<uint16_t>(i);
  return Partition({std::move(all)}, alphabet_size);
}

bool Partition::coarsens(const Partition& finer) const {
  if (finer.alphabet_size() != alphabet_size()) return false;
  for (const auto& block : finer.blocks_) {
    uint16_t home = block_of_[block.front()];
    for (uint16_t atom : block)
      if (block_of_[atom] != home) return false;
  }
  return true;
}

}  // namespace pidc
