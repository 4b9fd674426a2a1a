#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pidc/distribution.hpp"

namespace pidc {

/// Reference two-source decomposition, in bits.
struct ExpectedDecomposition {
  double total = 0.0;
  double redundant = 0.0;
  double unique1 = 0.0;
  double unique2 = 0.0;
  double synergy = 0.0;
};

/// A canonical example distribution together with its reference breakdown
/// (absent for the three-source counterexample, which has no two-source
/// decomposition).
struct CanonicalExample {
  std::string name;
  JointDistribution distribution;
  std::optional<ExpectedDecomposition> expected;
};

/// Builds one of the named example distributions. Names are case sensitive:
/// Rdn, ImperfectRdn, Unq1, Unq2, Unq, Syn, Corner, Xor, And, Sum, Dyadic,
/// Triadic, RdnXor, RdnUnqXor, Table2Counterexample.
CanonicalExample canonical_example(std::string_view name);

const std::vector<std::string>& canonical_example_names();

}  // namespace pidc
