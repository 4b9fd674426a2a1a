#include "pidc/multiple.hpp"

#include <map>

namespace pidc {

JointDistribution joint_target_distribution(const JointDistribution& d) {
  // Atoms sharing a source tuple collapse onto one joint-target outcome.
  std::map<std::vector<uint16_t>, double> grouped;
  for (const auto& a : d.atoms()) grouped[a.src] += a.mass;

  std::vector<Record> records;
  records.reserve(grouped.size());
  for (const auto& [src, mass] : grouped) {
    Record r;
    r.sources.reserve(src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
      r.sources.push_back(d.source_alphabets()[i][src[i]]);
    r.target = make_tuple_symbol(r.sources);
    r.mass = mass;
    records.push_back(std::move(r));
  }

  DistributionOptions opts;
  opts.renormalize = true;  // absorbs accumulated rounding in the regrouped masses
  opts.source_names = d.source_names();
  opts.source_alphabets = d.source_alphabets();
  return JointDistribution::load(records, opts);
}

double multiple_information(const JointDistribution& d, const SearchConfig& cfg) {
  JointDistribution joint = joint_target_distribution(d);
  std::vector<uint32_t> singletons;
  for (int i = 0; i < d.source_count(); ++i) singletons.push_back(1u << i);
  return shared_info(joint, normalize_antichain(singletons), cfg).value;
}

}  // namespace pidc
