#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "pidc/distribution.hpp"

namespace pidc {

/// Collection of pairwise incomparable source subsets (no element contains
/// another), canonically sorted by mask. These are the nodes of the
/// redundancy lattice.
struct Antichain {
  std::vector<uint32_t> sets;  // source-set bitmasks, ascending

  static Antichain of(std::initializer_list<SourceSet> sets);

  std::size_t size() const { return sets.size(); }

  bool operator==(const Antichain&) const = default;
  auto operator<=>(const Antichain&) const = default;
};

/// Drops duplicates and supersets of other members; the rest is an antichain.
Antichain normalize_antichain(std::span<const uint32_t> masks);
Antichain normalize_antichain(std::span<const SourceSet> sets);

/// a is below b in the redundancy order: every element of b contains some
/// element of a.
bool redundancy_leq(const Antichain& a, const Antichain& b);

/// All antichains over the non-empty subsets of {1..N}, with the redundancy
/// partial order materialized. N is capped at 4; the node count explodes
/// beyond that.
class RedundancyLattice {
 public:
  static RedundancyLattice build(int n);

  int source_count() const { return n_; }
  const std::vector<Antichain>& nodes() const { return nodes_; }
  const Antichain& node(int i) const { return nodes_[i]; }

  /// Index of a node; the antichain must be normalized.
  int index_of(const Antichain& a) const;

  /// Everything strictly below the node in the redundancy order.
  std::span<const int> strict_down_set(int node) const;
  std::vector<Antichain> strict_down_set(const Antichain& a) const;

  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * nodes_.size() + b]; }

  int bottom() const { return bottom_; }  // all singletons
  int top() const { return top_; }        // the full source set alone

 private:
  RedundancyLattice() = default;

  int n_ = 0;
  std::vector<Antichain> nodes_;
  std::vector<char> leq_;                  // row-major nodes x nodes
  std::vector<std::vector<int>> below_;    // strict down-sets
  int bottom_ = -1;
  int top_ = -1;
};

}  // namespace pidc
