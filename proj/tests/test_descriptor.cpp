#include <doctest.h>

#include <random>
#include <set>

#include "pidc/corpus.hpp"
#include "pidc/expansion.hpp"
#include "support.hpp"

using namespace pidc;
using support::make_distribution;
using support::row;

TEST_CASE("shannon descriptor shapes") {
  Descriptor s4 = Descriptor::shannon(4);
  CHECK(s4.depth() == 1);
  CHECK(s4.level(0).is_discrete());
  CHECK(s4.level(1).is_trivial());

  // one symbol: the chain collapses to the trivial partition alone
  Descriptor s1 = Descriptor::shannon(1);
  CHECK(s1.depth() == 0);

  // two symbols: the only descriptor is the Shannon descriptor
  auto all2 = enumerate_all_descriptors(2);
  REQUIRE(all2.size() == 1);
  CHECK(all2.front() == Descriptor::shannon(2));

  CHECK_THROWS_AS(Descriptor::shannon(0), Error);
}

TEST_CASE("validate enforces the chain conditions") {
  Partition half({{0, 1}, {2, 3}}, 4);
  CHECK_NOTHROW(Descriptor::validate({Partition::discrete(4), half, Partition::trivial(4)}));

  try {
    Descriptor::validate({Partition::discrete(4), half, half, Partition::trivial(4)});
    FAIL("expected RepeatedLevel");
  } catch (const Error& e) {
    CHECK(e.code() == errc::repeated_level);
  }

  try {
    Descriptor::validate({Partition::discrete(4), half});
    FAIL("expected BadEndpoints");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_endpoints);
  }

  try {
    Descriptor::validate(
        {Partition::discrete(4), half, Partition({{0, 2}, {1, 3}}, 4), Partition::trivial(4)});
    FAIL("expected NotCoarsening");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_coarsening);
  }
}

TEST_CASE("canonical descriptor of a tuple target") {
  // binary pair target: level 1 groups by the second coordinate
  std::vector<Record> rows;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      rows.push_back(row({std::to_string(x1), std::to_string(x2)},
                         make_tuple_symbol(std::vector<Symbol>{std::to_string(x1),
                                                               std::to_string(x2)}),
                         0.25));
  JointDistribution d = make_distribution(rows, false);
  Descriptor c = canonical_descriptor(d);
  REQUIRE(c.depth() == 2);
  // target alphabet sorts to 0,0 / 0,1 / 1,0 / 1,1; grouping by x2 pairs
  // indices {0,2} and {1,3}
  CHECK(c.level(1) == Partition({{0, 2}, {1, 3}}, 4));
  CHECK(c.level(2).is_trivial());
}

TEST_CASE("canonical descriptor of a plain target is the Shannon descriptor") {
  JointDistribution d =
      make_distribution({row({"0"}, "a", 0.5), row({"1"}, "b", 0.5)}, false);
  CHECK(canonical_descriptor(d) == Descriptor::shannon(2));
}

TEST_CASE("canonical descriptor reproduces the three-variable counterexample chain") {
  // target symbols carry the full coarsening history as coordinates
  std::vector<Record> rows{
      row({"0"}, "0,0,0", 0.25),
      row({"1"}, "1,0,0", 0.25),
      row({"2"}, "2,1,0", 0.25),
      row({"3"}, "3,1,0", 0.25),
  };
  JointDistribution d = make_distribution(rows, false);
  Descriptor c = canonical_descriptor(d);
  REQUIRE(c.depth() == 2);
  CHECK(c.level(1) == Partition({{0, 1}, {2, 3}}, 4));
  CHECK(c.level(2).is_trivial());
}

TEST_CASE("canonical descriptor rejects mixed arity") {
  JointDistribution d =
      make_distribution({row({"0"}, "a,b", 0.5), row({"1"}, "c", 0.5)}, false);
  CHECK_THROWS_AS(canonical_descriptor(d), Error);
}

TEST_CASE("refine inserts an intermediate level") {
  Partition star({{0}, {1, 2}, {3, 4}, {5}}, 6);
  Partition coarse({{0, 1, 2}, {3, 4, 5}}, 6);
  Descriptor base = Descriptor::validate({Partition::discrete(6), coarse, Partition::trivial(6)});
  Descriptor refined = refine(base, 1, star);
  CHECK(refined.depth() == 3);
  CHECK(refined.level(1) == star);

  CHECK_THROWS_AS(refine(base, 1, Partition::discrete(6)), Error);
  CHECK_THROWS_AS(refine(base, 1, coarse), Error);
}

TEST_CASE("every two-block partition refines the three-symbol Shannon descriptor") {
  Descriptor s = Descriptor::shannon(3);
  std::vector<Partition> two_block{Partition({{0, 1}, {2}}, 3), Partition({{0, 2}, {1}}, 3),
                                   Partition({{0}, {1, 2}}, 3)};
  for (const auto& p : two_block) {
    Descriptor r = refine(s, 1, p);
    CHECK(r.depth() == 2);
  }
}

TEST_CASE("merge tree enumeration counts (2n-3)!!") {
  std::size_t expected[] = {1, 1, 3, 15, 105, 945, 10395};  // n = 1..7
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::string> seen;
    std::size_t count = 0;
    for_each_merge_tree(n, [&](const MergeTree& t) {
      ++count;
      CHECK(seen.insert(t.encoding()).second);  // no duplicates
      return true;
    });
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("merge tree enumeration respects the cap") {
  CHECK_THROWS_AS(enumerate_merge_trees(13), Error);
  CHECK_NOTHROW(enumerate_merge_trees(3, 3));
  CHECK_THROWS_AS(enumerate_merge_trees(4, 3), Error);
}

TEST_CASE("descriptors from merge trees") {
  SUBCASE("caterpillar over three symbols") {
    // ((0 1) 2): merge {0,1} first, then everything
    MergeTree t;
    t.nodes = {{-1, -1, 0}, {-1, -1, 1}, {0, 1, 0}, {-1, -1, 2}, {2, 3, 0}};
    t.root = 4;
    t.leaf_count = 3;
    Descriptor d = descriptor_from_merge_tree(t);
    REQUIRE(d.depth() == 2);
    CHECK(d.level(1) == Partition({{0, 1}, {2}}, 3));
  }
  SUBCASE("two symbols give the Shannon descriptor") {
    MergeTree t;
    t.nodes = {{-1, -1, 0}, {-1, -1, 1}, {0, 1, 0}};
    t.root = 2;
    t.leaf_count = 2;
    CHECK(descriptor_from_merge_tree(t) == Descriptor::shannon(2));
  }
  SUBCASE("balanced four-leaf tree serializes smallest block first") {
    // ((0 1)(2 3))
    MergeTree t;
    t.nodes = {{-1, -1, 0}, {-1, -1, 1}, {0, 1, 0}, {-1, -1, 2}, {-1, -1, 3}, {3, 4, 0}, {2, 5, 0}};
    t.root = 6;
    t.leaf_count = 4;
    Descriptor d = descriptor_from_merge_tree(t);
    REQUIRE(d.depth() == 3);
    CHECK(d.level(1) == Partition({{0, 1}, {2}, {3}}, 4));
    CHECK(d.level(2) == Partition({{0, 1}, {2, 3}}, 4));
  }
}

TEST_CASE("merge tree chains stay within the pairwise merge bound and validate") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_merge_tree(n, [&](const MergeTree& t) {
      Descriptor d = descriptor_from_merge_tree(t);
      CHECK(pairwise_merge_bounded(d));
      CHECK(d.alphabet_size() == n);
      CHECK(d.depth() == (n >= 2 ? n - 1 : 0));
      return true;
    });
  }
}

namespace {

// Chain counting by block count alone: coarsenings of a k-block partition
// correspond to set partitions of k items.
long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

long chain_count(int k) {
  if (k == 1) return 1;
  long total = 0;
  for (int j = 1; j < k; ++j) total += stirling2(k, j) * chain_count(j);
  return total;
}

}  // namespace

TEST_CASE("full descriptor enumeration matches the independent chain count") {
  std::size_t expected[] = {1, 1, 4, 32, 436};  // chain_count(1..5)
  for (std::size_t n = 1; n <= 5; ++n) {
    auto all = enumerate_all_descriptors(n);
    CHECK(all.size() == expected[n - 1]);
    CHECK(static_cast<long>(all.size()) == chain_count(static_cast<int>(n)));
    std::set<std::string> seen;
    for (const auto& d : all) CHECK(seen.insert(d.encoding()).second);
  }
  CHECK_THROWS_AS(enumerate_all_descriptors(6), Error);
}

TEST_CASE("serialization order of disjoint merges does not change expansion values") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    JointDistribution d = support::random_distribution(rng, 2, 3, 5);
    const std::size_t n = d.target_size();
    auto trees = enumerate_merge_trees(n);
    std::uniform_int_distribution<std::size_t> pick_tree(0, trees.size() - 1);
    const MergeTree& t = trees[pick_tree(rng)];
    Descriptor canonical = descriptor_from_merge_tree(t);

    // Alternate serialization: process mergeable nodes in random order.
    std::vector<char> done(t.nodes.size(), 0);
    for (std::size_t i = 0; i < t.nodes.size(); ++i) done[i] = t.nodes[i].is_leaf();
    std::vector<Partition> levels{Partition::discrete(n)};
    Partition current = levels.front();
    for (std::size_t step = 0; step + 1 < n; ++step) {
      std::vector<std::size_t> ready;
      for (std::size_t v = 0; v < t.nodes.size(); ++v) {
        const auto& nd = t.nodes[v];
        if (!done[v] && !nd.is_leaf() && done[static_cast<std::size_t>(nd.left)] &&
            done[static_cast<std::size_t>(nd.right)])
          ready.push_back(v);
      }
      std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
      std::size_t v = ready[pick(rng)];
      const auto& nd = t.nodes[v];
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
      done[v] = 1;
    }
    Descriptor shuffled = Descriptor::validate(std::move(levels));

    for (uint32_t mask : {1u, 2u, 3u}) {
      double lhs = expand(d, SourceSet{mask}, canonical).total;
      double rhs = expand(d, SourceSet{mask}, shuffled).total;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
  }
}
