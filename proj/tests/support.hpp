#pragma once

// Shared helpers for the test suites: seeded random distributions,
// descriptors and refinements, plus brute-force reference searches kept
// independent of the production search path.

#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pidc/corpus.hpp"
#include "pidc/descriptor.hpp"
#include "pidc/distribution.hpp"
#include "pidc/expansion.hpp"
#include "pidc/pid.hpp"

namespace support {

using namespace pidc;

inline JointDistribution make_distribution(std::vector<Record> rows, bool renormalize = true) {
  return JointDistribution::load(rows, DistributionOptions{.renormalize = renormalize});
}

inline Record row(std::vector<std::string> sources, std::string target, double mass) {
  return Record{std::move(sources), std::move(target), mass};
}

/// Random distribution over `n_sources` variables and one target. Alphabets
/// are declared explicitly so zero-mass symbols survive into the alphabet.
inline JointDistribution random_distribution(std::mt19937& rng, int n_sources,
                                             int max_source_size, int max_target_size,
                                             double zero_prob = 0.25) {
  std::uniform_int_distribution<int> source_size(2, max_source_size);
  std::uniform_int_distribution<int> target_size(2, max_target_size);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  while (true) {
    std::vector<int> sizes(static_cast<std::size_t>(n_sources));
    for (auto& s : sizes) s = source_size(rng);
    int t = target_size(rng);

    DistributionOptions opts;
    opts.renormalize = true;
    for (int s : sizes) {
      std::vector<Symbol> alpha;
      for (int v = 0; v < s; ++v) alpha.push_back(std::to_string(v));
      opts.source_alphabets.push_back(std::move(alpha));
    }
    for (int v = 0; v < t; ++v) opts.target_alphabet.push_back(std::to_string(v));

    std::vector<Record> rows;
    std::vector<int> idx(static_cast<std::size_t>(n_sources), 0);
    int positive = 0;
    while (true) {
      for (int y = 0; y < t; ++y) {
        double mass = unit(rng) < zero_prob ? 0.0 : unit(rng);
        if (mass > 0.0) ++positive;
        Record r;
        for (int i = 0; i < n_sources; ++i)
          r.sources.push_back(std::to_string(idx[static_cast<std::size_t>(i)]));
        r.target = std::to_string(y);
        r.mass = mass;
        rows.push_back(std::move(r));
      }
      int i = 0;
      for (; i < n_sources; ++i) {
        if (++idx[static_cast<std::size_t>(i)] < sizes[static_cast<std::size_t>(i)]) break;
        idx[static_cast<std::size_t>(i)] = 0;
      }
      if (i == n_sources) break;
    }
    if (positive < 2) continue;
    return JointDistribution::load(rows, opts);
  }
}

/// Random strict coarsening of `p`: group its blocks into fewer groups.
inline Partition random_coarsening(std::mt19937& rng, const Partition& p) {
  const std::size_t k = p.block_count();
  std::uniform_int_distribution<std::size_t> group_count(1, k - 1);
  std::size_t g = group_count(rng);
  std::uniform_int_distribution<std::size_t> pick(0, g - 1);
  std::vector<std::vector<uint16_t>> groups(g);
  for (std::size_t b = 0; b < k; ++b) {
    auto& dst = groups[pick(rng)];
    dst.insert(dst.end(), p.block(b).begin(), p.block(b).end());
  }
  std::vector<std::vector<uint16_t>> blocks;
  for (auto& grp : groups)
    if (!grp.empty()) blocks.push_back(std::move(grp));
  return Partition(std::move(blocks), p.alphabet_size());
}

inline Descriptor random_descriptor(std::mt19937& rng, std::size_t alphabet_size) {
  std::vector<Partition> levels{Partition::discrete(alphabet_size)};
  while (!levels.back().is_trivial()) levels.push_back(random_coarsening(rng, levels.back()));
  return Descriptor::validate(std::move(levels));
}

/// A partition strictly between two consecutive levels, when one exists.
inline std::optional<Partition> random_intermediate(std::mt19937& rng, const Partition& finer,
                                                    const Partition& coarser) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<uint16_t>> blocks;
    for (const auto& cblock : coarser.blocks()) {
      // the finer blocks living inside this coarser block
      std::vector<std::size_t> members;
      for (std::size_t b = 0; b < finer.block_count(); ++b)
        if (coarser.block_of(finer.block(b).front()) == coarser.block_of(cblock.front()))
          members.push_back(b);
      // regroup them at random
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      std::vector<std::vector<uint16_t>> groups(members.size());
      for (std::size_t m : members) {
        auto& dst = groups[pick(rng)];
        dst.insert(dst.end(), finer.block(m).begin(), finer.block(m).end());
      }
      for (auto& grp : groups)
        if (!grp.empty()) blocks.push_back(std::move(grp));
    }
    Partition candidate(std::move(blocks), finer.alphabet_size());
    if (!(candidate == finer) && !(candidate == coarser)) return candidate;
  }
  return std::nullopt;
}

/// Reference minimum of shared_given_descriptor over an explicit descriptor
/// list; independent of the production subset search.
inline std::pair<double, const Descriptor*> min_shared_over(
    const JointDistribution& d, const Antichain& a, const std::vector<Descriptor>& descriptors) {
  double best = std::numeric_limits<double>::infinity();
  const Descriptor* arg = nullptr;
  for (const auto& desc : descriptors) {
    double v = shared_given_descriptor(d, a, desc);
    if (v < best) {
      best = v;
      arg = &desc;
    }
  }
  return {best, arg};
}

/// Reference minimum over the literal merge-tree enumeration.
inline double min_shared_over_merge_trees(const JointDistribution& d, const Antichain& a) {
  double best = std::numeric_limits<double>::infinity();
  for_each_merge_tree(d.target_size(), [&](const MergeTree& t) {
    best = std::min(best, shared_given_descriptor(d, a, descriptor_from_merge_tree(t)));
    return true;
  });
  return best;
}

}  // namespace support
