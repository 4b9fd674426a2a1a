#include "pidc/descriptor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pidc {

Descriptor Descriptor::validate(std::vector<Partition> levels) {
  if (levels.empty()) raise(errc::bad_endpoints, "descriptor has no levels");
  const std::size_t n = levels.front().alphabet_size();
  for (const auto& p : levels)
    if (p.alphabet_size() != n)
      raise(errc::descriptor_alphabet_mismatch, "levels range over different alphabets");
  if (!levels.front().is_discrete())
    raise(errc::bad_endpoints, "level 0 must be the discrete partition");
  if (!levels.back().is_trivial())
    raise(errc::bad_endpoints, "the last level must be the trivial partition");
  for (std::size_t l = 1; l < levels.size(); ++l) {
    if (levels[l] == levels[l - 1])
      raise(errc::repeated_level, "consecutive levels are identical");
    if (!levels[l].coarsens(levels[l - 1]))
      raise(errc::not_coarsening, "level " + std::to_string(l) +
                                      " does not coarsen the previous level");
  }
  Descriptor d;
  d.levels_ = std::move(levels);
  return d;
}

Descriptor Descriptor::shannon(std::size_t alphabet_size) {
  if (alphabet_size == 0) raise(errc::empty_alphabet, "no target symbols");
  if (alphabet_size == 1) return validate({Partition::trivial(1)});
  return validate({Partition::discrete(alphabet_size), Partition::trivial(alphabet_size)});
}

std::string Descriptor::encoding() const {
  std::ostringstream out;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    if (l) out << " / ";
    const auto& blocks = levels_[l].blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) out << '|';
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        if (i) out << ',';
        out << blocks[b][i];
      }
    }
  }
  return out.str();
}

Symbol make_tuple_symbol(std::span<const Symbol> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

std::vector<Symbol> split_tuple_symbol(const Symbol& s) {
  std::vector<Symbol> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Descriptor canonical_descriptor(const JointDistribution& d) {
  const auto& alphabet = d.target_alphabet();
  std::vector<std::vector<Symbol>> tuples;
  tuples.reserve(alphabet.size());
  for (const auto& s : alphabet) tuples.push_back(split_tuple_symbol(s));
  const std::size_t arity = tuples.front().size();
  for (const auto& t : tuples)
    if (t.size() != arity)
      raise(errc::target_not_tuple, "target symbols are tuples of different arity");

  const std::size_t n = alphabet.size();
  std::vector<Partition> levels{Partition::discrete(n)};
  // Level l groups symbols agreeing on coordinates l+1..arity; steps that do
  // not change the grouping are dropped.
  for (std::size_t l = 1; l + 1 <= arity; ++l) {
    std::map<std::vector<Symbol>, std::vector<uint16_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Symbol> tail(tuples[i].begin() + static_cast<long>(l), tuples[i].end());
      groups[std::move(tail)].push_back(static_cast<uint16_t>(i));
    }
    std::vector<std::vector<uint16_t>> blocks;
    blocks.reserve(groups.size());
    for (auto& [tail, atoms] : groups) blocks.push_back(std::move(atoms));
    Partition p(std::move(blocks), n);
    if (!(p == levels.back())) levels.push_back(std::move(p));
  }
  if (!levels.back().is_trivial()) levels.push_back(Partition::trivial(n));
  return Descriptor::validate(std::move(levels));
}

Descriptor refine(const Descriptor& desc, std::size_t level, const Partition& intermediate) {
  if (level < 1 || level > desc.depth()) raise(errc::not_between, "no such level transition");
  const Partition& finer = desc.level(level - 1);
  const Partition& coarser = desc.level(level);
  if (intermediate == finer || intermediate == coarser)
    raise(errc::not_between, "partition equals one of the surrounding levels");
  if (!intermediate.coarsens(finer) || !coarser.coarsens(intermediate))
    raise(errc::not_between, "partition is not between the surrounding levels");
  std::vector<Partition> levels = desc.levels();
  levels.insert(levels.begin() + static_cast<long>(level), intermediate);
  return Descriptor::validate(std::move(levels));
}

MergeTree MergeTree::single_leaf(uint16_t label) {
  MergeTree t;
  t.nodes.push_back({-1, -1, label});
  t.root = 0;
  t.leaf_count = 1;
  return t;
}

std::vector<uint16_t> MergeTree::leaves_below(int node) const {
  const Node& nd = nodes[static_cast<std::size_t>(node)];
  if (nd.is_leaf()) return {nd.leaf};
  auto l = leaves_below(nd.left);
  auto r = leaves_below(nd.right);
  std::vector<uint16_t> out;
  out.reserve(l.size() + r.size());
  std::merge(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

uint16_t MergeTree::min_leaf(int node) const {
  const Node& nd = nodes[static_cast<std::size_t>(node)];
  if (nd.is_leaf()) return nd.leaf;
  return std::min(min_leaf(nd.left), min_leaf(nd.right));
}

namespace {

std::string encode_node(const MergeTree& t, int node) {
  const MergeTree::Node& nd = t.nodes[static_cast<std::size_t>(node)];
  if (nd.is_leaf()) return std::to_string(nd.leaf);
  int a = nd.left, b = nd.right;
  if (t.min_leaf(a) > t.min_leaf(b)) std::swap(a, b);
  return "(" + encode_node(t, a) + " " + encode_node(t, b) + ")";
}

/// Grafts leaf `label` onto the edge above `pos` (or above the root).
MergeTree graft(const MergeTree& t, int pos, uint16_t label) {
  MergeTree out = t;
  int leaf_idx = static_cast<int>(out.nodes.size());
  out.nodes.push_back({-1, -1, label});
  int join_idx = static_cast<int>(out.nodes.size());
  out.nodes.push_back({pos, leaf_idx, 0});
  if (pos == out.root) {
    out.root = join_idx;
  } else {
    for (std::size_t i = 0; i + 2 < out.nodes.size(); ++i) {
      auto& nd = out.nodes[i];
      if (nd.is_leaf()) continue;
      if (nd.left == pos) nd.left = join_idx;
      if (nd.right == pos) nd.right = join_idx;
    }
  }
  out.leaf_count += 1;
  return out;
}

bool grow(const MergeTree& t, std::size_t n, const std::function<bool(const MergeTree&)>& visit) {
  if (t.leaf_count == n) return visit(t);
  uint16_t next = static_cast<uint16_t>(t.leaf_count);
  // Each node marks the edge above it; together with the root position this
  // yields every unordered tree exactly once.
  for (int pos = 0; pos < static_cast<int>(t.nodes.size()); ++pos)
    if (!grow(graft(t, pos, next), n, visit)) return false;
  return true;
}

}  // namespace

std::string MergeTree::encoding() const { return encode_node(*this, root); }

void for_each_merge_tree(std::size_t n, const std::function<bool(const MergeTree&)>& visit,
                         std::size_t max_alphabet) {
  if (n == 0) raise(errc::empty_alphabet, "no target symbols");
  if (n > max_alphabet)
    raise(errc::alphabet_too_large, std::to_string(n) + " symbols exceeds the enumeration cap of " +
                                        std::to_string(max_alphabet));
  grow(MergeTree::single_leaf(0), n, visit);
}

std::vector<MergeTree> enumerate_merge_trees(std::size_t n, std::size_t max_alphabet) {
  std::vector<MergeTree> out;
  for_each_merge_tree(
      n,
      [&](const MergeTree& t) {
        out.push_back(t);
        return true;
      },
      max_alphabet);
  return out;
}

Descriptor descriptor_from_merge_tree(const MergeTree& t) {
  const std::size_t n = t.leaf_count;
  {
    auto leaves = t.leaves_below(t.root);
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (leaves[i] != i) raise(errc::invalid_partition, "tree leaves are not 0..n-1");
    if (leaves.size() != n) raise(errc::invalid_partition, "inconsistent leaf count");
  }
  if (n == 1) return Descriptor::shannon(1);

  // done[v] marks nodes already realized as blocks of the current level;
  // among mergeable nodes the one with the smallest member goes first.
  std::vector<char> done(t.nodes.size(), 0);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) done[i] = t.nodes[i].is_leaf();

  std::vector<Partition> levels{Partition::discrete(n)};
  Partition current = levels.front();
  for (std::size_t step = 0; step + 1 < n; ++step) {
    int pick = -1;
    uint16_t pick_min = UINT16_MAX;
    for (std::size_t v = 0; v < t.nodes.size(); ++v) {
      const auto& nd = t.nodes[v];
      if (done[v] || nd.is_leaf()) continue;
      if (!done[static_cast<std::size_t>(nd.left)] || !done[static_cast<std::size_t>(nd.right)])
        continue;
      uint16_t m = t.min_leaf(static_cast<int>(v));
      if (m < pick_min) {
        pick_min = m;
        pick = static_cast<int>(v);
      }
    }
    const auto& nd = t.nodes[static_cast<std::size_t>(pick)];
    uint16_t a = current.block_of(t.min_leaf(nd.left));
    uint16_t b = current.block_of(t.min_leaf(nd.right));
    std::vector<std::vector<uint16_t>> blocks;
    std::vector<uint16_t> merged = current.block(a);
    merged.insert(merged.end(), current.block(b).begin(), current.block(b).end());
    blocks.push_back(std::move(merged));
    for (std::size_t i = 0; i < current.block_count(); ++i)
      if (i != a && i != b) blocks.push_back(current.block(i));
    current = Partition(std::move(blocks), n);
    levels.push_back(current);
    done[static_cast<std::size_t>(pick)] = 1;
  }
  return Descriptor::validate(std::move(levels));
}

namespace {

/// All set partitions of {0..k-1} via restricted growth strings.
std::vector<std::vector<uint16_t>> set_partitions(std::size_t k) {
  std::vector<std::vector<uint16_t>> out;
  std::vector<uint16_t> rgs(k, 0);
  while (true) {
    out.push_back(rgs);
    // next restricted growth string
    std::size_t i = k;
    while (i-- > 1) {
      uint16_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < k; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i == 0 || i >= k) break;
  }
  return out;
}

/// Strict coarsenings of `p`: group p's blocks by any set partition of the
/// block index set other than all-singletons.
std::vector<Partition> strict_coarsenings(const Partition& p) {
  const std::size_t k = p.block_count();
  std::vector<Partition> out;
  for (const auto& rgs : set_partitions(k)) {
    uint16_t groups = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (groups == k) continue;  // identity grouping
    std::vector<std::vector<uint16_t>> blocks(groups);
    for (std::size_t b = 0; b < k; ++b)
      blocks[rgs[b]].insert(blocks[rgs[b]].end(), p.block(b).begin(), p.block(b).end());
    out.emplace_back(std::move(blocks), p.alphabet_size());
  }
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return a.blocks() < b.blocks(); });
  return out;
}

void chains_from(std::vector<Partition>& prefix, std::vector<Descriptor>& out) {
  if (prefix.back().is_trivial()) {
    out.push_back(Descriptor::validate(prefix));
    return;
  }
  for (const Partition& next : strict_coarsenings(prefix.back())) {
    prefix.push_back(next);
    chains_from(prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Descriptor> enumerate_all_descriptors(std::size_t n) {
  if (n == 0) raise(errc::empty_alphabet, "no target symbols");
  if (n > 5)
    raise(errc::alphabet_too_large,
          "full descriptor enumeration is capped at 5 symbols, got " + std::to_string(n));
  std::vector<Descriptor> out;
  std::vector<Partition> prefix{Partition::discrete(n)};
  chains_from(prefix, out);
  return out;
}

bool pairwise_merge_bounded(const Descriptor& desc) {
  for (std::size_t l = 1; l <= desc.depth(); ++l) {
    const Partition& finer = desc.level(l - 1);
    const Partition& coarser = desc.level(l);
    std::vector<int> preimages(coarser.block_count(), 0);
    for (std::size_t b = 0; b < finer.block_count(); ++b)
      preimages[coarser.block_of(finer.block(b).front())] += 1;
    for (int c : preimages)
      if (c > 2) return false;
  }
  return true;
}

}  // namespace pidc
