#pragma once

#include <map>

#include "pidc/expansion.hpp"
#include "pidc/lattice.hpp"

namespace pidc {

struct SearchConfig {
  /// Cap on the number of positive-mass target symbols the minimization will
  /// accept. The search cost grows as 3^m in that count.
  std::size_t max_alphabet = kDefaultAlphabetCap;
  /// Worker threads for the subset search; 0 means all hardware threads.
  /// Results are identical for any thread count.
  int threads = 0;
};

/// Information the sources of `a` share about the features singled out by the
/// descriptor: the expansion of I(X;Y) with each term replaced by the minimum
/// over the collection.
double shared_given_descriptor(const JointDistribution& d, const Antichain& a,
                               const Descriptor& desc);

/// Dual quantity with the per-term maximum over the collection.
double union_given_descriptor(const JointDistribution& d, const Antichain& a,
                              const Descriptor& desc);

struct MeasureResult {
  double value = 0.0;
  Descriptor descriptor;  // the optimizing descriptor (single-pair merge chain)
};

/// Shared information about the target: the minimum of shared_given_descriptor
/// over all descriptors, computed exactly over the merge-tree search domain.
MeasureResult shared_info(const JointDistribution& d, const Antichain& a,
                          const SearchConfig& cfg = {});

/// Union information about the target: the maximum of union_given_descriptor
/// over all descriptors.
MeasureResult union_info(const JointDistribution& d, const Antichain& a,
                         const SearchConfig& cfg = {});

using PiFunction = std::map<Antichain, double>;

/// The partial-information function induced by a descriptor: for each lattice
/// node, the node's shared information minus, per expansion term, the best
/// value attained strictly below it. Non-negative for every descriptor.
PiFunction pi_closed_form(const JointDistribution& d, const Descriptor& desc,
                          const RedundancyLattice& lattice);

/// Same allocation through the recursion mu(a) = I(a;desc) - sum of mu below
/// a. Cross-checks the closed form.
PiFunction pi_mobius(const JointDistribution& d, const Descriptor& desc,
                     const RedundancyLattice& lattice);

/// Two-source decomposition at the descriptor minimizing the shared
/// information of {{1},{2}}.
struct DecompositionResult {
  double total = 0.0;      // I(X1,X2;Y)
  double redundant = 0.0;  // mu({1}{2}), rounding noise in [-1e-9,0) clamped
  double unique1 = 0.0;    // mu({1})
  double unique2 = 0.0;    // mu({2})
  double synergy = 0.0;    // mu({12})
  PiFunction raw_mu;       // unclamped values per lattice node
  Descriptor minimizing_descriptor;
  double shared = 0.0;       // shared_info of {{1},{2}}
  double union_value = 0.0;  // union_info of {{1},{2}}
};

DecompositionResult decompose_two_sources(const JointDistribution& d,
                                          const SearchConfig& cfg = {});

}  // namespace pidc
