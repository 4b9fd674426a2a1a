#pragma once

#include <vector>

#include "pidc/descriptor.hpp"
#include "pidc/distribution.hpp"

namespace pidc {

/// One summand of the mutual-information expansion over a descriptor: the
/// event y^l singled out at level l, its probability mass, and
/// I(A; Y^{l-1} | y^l) in bits.
struct ExpansionTerm {
  std::size_t level = 0;  // 1..L
  Event event;
  double weight = 0.0;
  double value = 0.0;
};

struct Expansion {
  std::vector<ExpansionTerm> terms;  // level-ascending, canonical block order
  double total = 0.0;                // sum of weight*value; equals I(A;Y)
};

/// Expands I(A;Y) over the descriptor. Zero-mass events are omitted; their
/// conditional information is undefined and they contribute nothing.
Expansion expand(const JointDistribution& d, SourceSet a, const Descriptor& desc);

}  // namespace pidc
