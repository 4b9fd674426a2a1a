#include "pidc/lattice.hpp"

#include <algorithm>
#include <bit>

namespace pidc {

Antichain Antichain::of(std::initializer_list<SourceSet> sets) {
  return normalize_antichain(std::span<const SourceSet>(sets.begin(), sets.size()));
}

Antichain normalize_antichain(std::span<const uint32_t> masks) {
  if (masks.empty()) raise(errc::empty_collection, "no source sets");
  std::vector<uint32_t> unique;
  for (uint32_t m : masks) {
    if (m == 0) raise(errc::invalid_variable_selection, "empty source set in collection");
    unique.push_back(m);
  }
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  Antichain out;
  for (uint32_t m : unique) {
    bool is_superset = false;
    for (uint32_t other : unique) {
      if (other != m && (other & m) == other) {  // other is a proper subset of m
        is_superset = true;
        break;
      }
    }
    if (!is_superset) out.sets.push_back(m);
  }
  return out;
}

Antichain normalize_antichain(std::span<const SourceSet> sets) {
  std::vector<uint32_t> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) masks.push_back(s.mask);
  return normalize_antichain(masks);
}

bool redundancy_leq(const Antichain& a, const Antichain& b) {
  for (uint32_t bs : b.sets) {
    bool covered = false;
    for (uint32_t as : a.sets) {
      if ((as & bs) == as) {  // as subset of bs
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

RedundancyLattice RedundancyLattice::build(int n) {
  if (n < 1 || n > 4)
    raise(errc::too_many_sources, "lattice supported for 1..4 sources, got " + std::to_string(n));

  RedundancyLattice l;
  l.n_ = n;

  std::vector<uint32_t> elements;  // the non-empty subsets of {1..n}
  for (uint32_t m = 1; m < (1u << n); ++m) elements.push_back(m);

  // Every subset of the element set that is pairwise incomparable under
  // inclusion is a node.
  const std::size_t e = elements.size();
  for (uint64_t pick = 1; pick < (1ull << e); ++pick) {
    std::vector<uint32_t> sets;
    for (std::size_t i = 0; i < e; ++i)
      if (pick & (1ull << i)) sets.push_back(elements[i]);
    bool antichain = true;
    for (std::size_t i = 0; i < sets.size() && antichain; ++i)
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (i != j && (sets[i] & sets[j]) == sets[i]) {
          antichain = false;
          break;
        }
    if (antichain) l.nodes_.push_back(Antichain{std::move(sets)});
  }
  std::sort(l.nodes_.begin(), l.nodes_.end());

  const std::size_t count = l.nodes_.size();
  l.leq_.assign(count * count, 0);
  l.below_.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      bool le = redundancy_leq(l.nodes_[i], l.nodes_[j]);
      l.leq_[i * count + j] = le;
      if (le && i != j) l.below_[j].push_back(static_cast<int>(i));
    }

  // The order axioms are cheap to check exhaustively for small n.
  if (n <= 3) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!l.leq_[i * count + i]) raise(errc::node_not_in_lattice, "order is not reflexive");
      for (std::size_t j = 0; j < count; ++j) {
        if (i != j && l.leq_[i * count + j] && l.leq_[j * count + i])
          raise(errc::node_not_in_lattice, "order is not antisymmetric");
        if (!l.leq_[i * count + j]) continue;
        for (std::size_t k = 0; k < count; ++k)
          if (l.leq_[j * count + k] && !l.leq_[i * count + k])
            raise(errc::node_not_in_lattice, "order is not transitive");
      }
    }
  }

  std::vector<uint32_t> singletons;
  for (int i = 0; i < n; ++i) singletons.push_back(1u << i);
  l.bottom_ = l.index_of(Antichain{singletons});
  l.top_ = l.index_of(Antichain{{(1u << n) - 1}});
  return l;
}

int RedundancyLattice::index_of(const Antichain& a) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), a);
  if (it == nodes_.end() || !(*it == a))
    raise(errc::node_not_in_lattice, "antichain is not a lattice node");
  return static_cast<int>(it - nodes_.begin());
}

std::span<const int> RedundancyLattice::strict_down_set(int node) const {
  return below_[static_cast<std::size_t>(node)];
}

std::vector<Antichain> RedundancyLattice::strict_down_set(const Antichain& a) const {
  std::vector<Antichain> out;
  for (int i : strict_down_set(index_of(a))) out.push_back(nodes_[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace pidc
