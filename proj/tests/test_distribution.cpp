#include <doctest.h>

#include <random>

#include "pidc/corpus.hpp"
#include "pidc/expansion.hpp"
#include "support.hpp"

using namespace pidc;
using support::make_distribution;
using support::row;

namespace {

JointDistribution unq() { return canonical_example("Unq").distribution; }

}  // namespace

TEST_CASE("load accepts the four-row example table") {
  JointDistribution d = unq();
  CHECK(d.source_count() == 2);
  CHECK(d.target_size() == 4);
  CHECK(d.atoms().size() == 4);
  for (const auto& a : d.atoms()) CHECK(a.mass == doctest::Approx(0.25));
}

TEST_CASE("load handles a point mass") {
  JointDistribution d = make_distribution({row({"0", "0"}, "y", 1.0)}, false);
  CHECK(entropy(d, select_target()) == 0.0);
  CHECK(entropy(d, select_sources(SourceSet::all(2))) == 0.0);
  CHECK(mutual_information(d, SourceSet::all(2)) == 0.0);
}

TEST_CASE("load rejects unnormalized mass without the renormalize flag") {
  std::vector<Record> rows{row({"0"}, "a", 0.5), row({"1"}, "b", 0.49)};
  CHECK_THROWS_WITH_AS(JointDistribution::load(rows), doctest::Contains("MassNotNormalized"),
                       Error);
  JointDistribution d = make_distribution(rows, true);
  CHECK(d.target_mass(0) == doctest::Approx(0.5 / 0.99));
}

TEST_CASE("load rejects negative masses and duplicate keys") {
  CHECK_THROWS_AS(JointDistribution::load(std::vector<Record>{row({"0"}, "a", -0.25)}), Error);
  std::vector<Record> dup{row({"0"}, "a", 0.5), row({"0"}, "a", 0.5)};
  try {
    JointDistribution::load(dup);
    FAIL("expected DuplicateKey");
  } catch (const Error& e) {
    CHECK(e.code() == errc::duplicate_key);
  }
}

TEST_CASE("entropy in bits") {
  JointDistribution coin = make_distribution({row({"h"}, "h", 0.5), row({"t"}, "t", 0.5)}, false);
  CHECK(entropy(coin, select_target()) == doctest::Approx(1.0));
  CHECK(entropy(unq(), select_target()) == doctest::Approx(2.0));
}

TEST_CASE("entropy rejects bad selections") {
  CHECK_THROWS_AS(entropy(unq(), VariableSelection{}), Error);
  CHECK_THROWS_AS(entropy(unq(), select_sources(SourceSet{0b100})), Error);
}

TEST_CASE("mutual information on the examples") {
  CHECK(mutual_information(unq(), SourceSet::all(2)) == doctest::Approx(2.0));

  JointDistribution prod = make_distribution(
      {row({"0", "0"}, "0", 0.25), row({"0", "1"}, "1", 0.25), row({"1", "0"}, "0", 0.25),
       row({"1", "1"}, "1", 0.25)},
      false);
  // target copies x2, x1 is independent noise
  CHECK(mutual_information(prod, SourceSet::of({1})) == doctest::Approx(0.0));

  JointDistribution land = canonical_example("And").distribution;
  CHECK(mutual_information(land, SourceSet::all(2)) == doctest::Approx(0.8113).epsilon(0.01));
}

TEST_CASE("mutual information is symmetric between selections") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    JointDistribution d = support::random_distribution(rng, 2, 3, 4);
    auto a = select_sources(SourceSet::of({1}));
    auto b = select_sources(SourceSet::of({2}));
    CHECK(mutual_information(d, a, b) == mutual_information(d, b, a));
    CHECK(mutual_information(d, a, select_target()) ==
          mutual_information(d, select_target(), a));
  }
}

TEST_CASE("conditional information given an event") {
  JointDistribution d = unq();
  Partition level1({{0, 1}, {2, 3}}, 4);
  Event top_half{{0, 1}};

  CHECK(conditional_mi_given_event(d, SourceSet::all(2), Partition::discrete(4), top_half) ==
        doctest::Approx(1.0));
  CHECK(conditional_mi_given_event(d, SourceSet::of({1}), Partition::discrete(4), top_half) ==
        doctest::Approx(0.0));
  // conditioning on everything recovers the plain coarsened information
  Event all{{0, 1, 2, 3}};
  CHECK(conditional_mi_given_event(d, SourceSet::of({1}), level1, all) == doctest::Approx(1.0));
  CHECK(conditional_mi_given_event(d, SourceSet::of({2}), level1, all) == doctest::Approx(0.0));
}

TEST_CASE("singleton events carry no information") {
  JointDistribution d = unq();
  CHECK(conditional_mi_given_event(d, SourceSet::all(2), Partition::discrete(4), Event{{2}}) ==
        0.0);
}

TEST_CASE("zero-mass events are rejected") {
  JointDistribution d = make_distribution(
      {row({"0"}, "a", 0.5), row({"1"}, "b", 0.5), row({"1"}, "c", 0.0)}, false);
  CHECK_THROWS_AS(
      conditional_mi_given_event(d, SourceSet::of({1}), Partition::discrete(3), Event{{2}}),
      Error);
}

TEST_CASE("chain identity for deterministic coarsenings") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    JointDistribution d = support::random_distribution(rng, 2, 3, 5);
    Partition coarse = support::random_coarsening(rng, Partition::discrete(d.target_size()));
    SourceSet x = SourceSet::all(2);

    Event all;
    for (uint16_t a = 0; a < d.target_size(); ++a) all.atoms.push_back(a);
    double i_coarse = conditional_mi_given_event(d, x, coarse, all);

    double within = 0.0;
    for (const auto& block : coarse.blocks()) {
      Event ev{block};
      double w = d.event_mass(ev);
      if (w <= kZeroMass) continue;
      within += w * conditional_mi_given_event(d, x, Partition::discrete(d.target_size()), ev);
    }
    CHECK(mutual_information(d, x) == doctest::Approx(i_coarse + within).epsilon(1e-9));
  }
}

TEST_CASE("data processing: coarsening never gains information") {
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    JointDistribution d = support::random_distribution(rng, 2, 3, 5);
    Partition coarse = support::random_coarsening(rng, Partition::discrete(d.target_size()));
    Event all;
    for (uint16_t a = 0; a < d.target_size(); ++a) all.atoms.push_back(a);
    double i_full = mutual_information(d, SourceSet::of({1}));
    double i_coarse = conditional_mi_given_event(d, SourceSet::of({1}), coarse, all);
    CHECK(i_coarse <= i_full + 1e-12);
  }
}

TEST_CASE("information quantities stay non-negative on random inputs") {
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    JointDistribution d = support::random_distribution(rng, 2, 3, 4);
    CHECK(entropy(d, select_target()) >= -1e-12);
    CHECK(mutual_information(d, SourceSet::of({1})) >= -1e-12);
    CHECK(mutual_information(d, SourceSet::of({2})) >= -1e-12);
    CHECK(mutual_information(d, SourceSet::all(2)) >= -1e-12);
  }
}
