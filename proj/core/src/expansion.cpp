#include "pidc/expansion.hpp"

namespace pidc {

Expansion expand(const JointDistribution& d, SourceSet a, const Descriptor& desc) {
  if (desc.alphabet_size() != d.target_size())
    raise(errc::descriptor_alphabet_mismatch,
          "descriptor ranges over " + std::to_string(desc.alphabet_size()) +
              " symbols, target has " + std::to_string(d.target_size()));

  Expansion out;
  for (std::size_t l = 1; l <= desc.depth(); ++l) {
    const Partition& coarse = desc.level(l);
    for (const auto& block : coarse.blocks()) {
      Event event{block};
      double weight = d.event_mass(event);
      if (weight <= kZeroMass) continue;
      double value = conditional_mi_given_event(d, a, desc.level(l - 1), event);
      out.total += weight * value;
      out.terms.push_back({l, std::move(event), weight, value});
    }
  }
  return out;
}

}  // namespace pidc
