#pragma once

#include "pidc/pid.hpp"

namespace pidc {

/// Rebuilds `d` with the target replaced by the tuple of all source values.
/// The new target alphabet is the support of the joint; zero-mass tuples
/// contribute nothing to any expansion term and would only enlarge the
/// search.
JointDistribution joint_target_distribution(const JointDistribution& d);

/// Multiple information of the sources: the shared information of all
/// singleton sources about the joint target (X1,...,XN). Any target already
/// present in `d` is ignored. Reduces to I(X1;X2) for N=2 and to H(X1) for
/// N=1.
double multiple_information(const JointDistribution& d, const SearchConfig& cfg = {});

}  // namespace pidc
