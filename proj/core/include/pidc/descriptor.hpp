#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pidc/distribution.hpp"
#include "pidc/partition.hpp"

namespace pidc {

/// Largest target alphabet accepted by the combinatorial enumerations and
/// searches unless the caller overrides the cap.
inline constexpr std::size_t kDefaultAlphabetCap = 12;

/// A descriptor of the target: a strictly coarsening chain of partitions of
/// the target alphabet, from the discrete partition (level 0, the target
/// itself) down to the trivial one (level L). For a one-symbol alphabet the
/// chain collapses to the trivial partition alone.
class Descriptor {
 public:
  /// Default-constructed descriptors are empty placeholders; every factory
  /// returns a validated chain.
  Descriptor() = default;

  /// Checks endpoint and strict-coarsening conditions and builds the chain.
  static Descriptor validate(std::vector<Partition> levels);

  /// The two-level descriptor that collapses the whole alphabet in one step.
  static Descriptor shannon(std::size_t alphabet_size);

  std::size_t alphabet_size() const {
    return levels_.empty() ? 0 : levels_.front().alphabet_size();
  }
  /// Number of coarsening steps L (0 for a one-symbol alphabet).
  std::size_t depth() const { return levels_.empty() ? 0 : levels_.size() - 1; }
  const Partition& level(std::size_t l) const { return levels_[l]; }
  const std::vector<Partition>& levels() const { return levels_; }

  /// Canonical text encoding, used for deduplication and tie-breaking.
  std::string encoding() const;

  bool operator==(const Descriptor& other) const { return levels_ == other.levels_; }

 private:
  std::vector<Partition> levels_;
};

/// Joins coordinate symbols into one tuple-valued target symbol.
Symbol make_tuple_symbol(std::span<const Symbol> parts);
std::vector<Symbol> split_tuple_symbol(const Symbol& s);

/// The coarsening chain that forgets one coordinate of a tuple-valued target
/// per level. Steps that do not coarsen anything are skipped. Requires every
/// target symbol to be a tuple of the same arity.
Descriptor canonical_descriptor(const JointDistribution& d);

/// Inserts `intermediate` strictly between levels l-1 and l of `desc`.
Descriptor refine(const Descriptor& desc, std::size_t level, const Partition& intermediate);

/// Leaf-labeled unordered binary hierarchy over the target alphabet. Encodes
/// the order-free content of a chain whose every step merges a single pair of
/// blocks.
struct MergeTree {
  struct Node {
    int left = -1;    // -1 for a leaf
    int right = -1;
    uint16_t leaf = 0;
    bool is_leaf() const { return left < 0; }
  };

  std::vector<Node> nodes;
  int root = -1;
  std::size_t leaf_count = 0;

  static MergeTree single_leaf(uint16_t label);

  /// Sorted leaf labels under a node.
  std::vector<uint16_t> leaves_below(int node) const;
  uint16_t min_leaf(int node) const;

  /// Canonical recursive encoding; children ordered by smallest leaf.
  std::string encoding() const;
};

/// Visits every unordered leaf-labeled binary tree over {0..n-1} exactly
/// once; there are (2n-3)!! of them for n >= 2. The visitor may return false
/// to stop early.
void for_each_merge_tree(std::size_t n, const std::function<bool(const MergeTree&)>& visit,
                         std::size_t max_alphabet = kDefaultAlphabetCap);

std::vector<MergeTree> enumerate_merge_trees(std::size_t n,
                                             std::size_t max_alphabet = kDefaultAlphabetCap);

/// Serializes a merge tree into a chain of single-pair merges. Disjoint
/// merges are emitted in canonical block order (smallest member first), which
/// fixes one chain per tree; any serialization has the same expansion values.
Descriptor descriptor_from_merge_tree(const MergeTree& t);

/// Exhaustive enumeration of every descriptor (all strictly coarsening
/// partition chains). Combinatorially explosive; intended as a test oracle
/// and capped at alphabets of five symbols.
std::vector<Descriptor> enumerate_all_descriptors(std::size_t n);

/// True when every coarsening step maps at most two finer blocks onto each
/// coarser block.
bool pairwise_merge_bounded(const Descriptor& desc);

}  // namespace pidc
