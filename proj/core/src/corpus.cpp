#include "pidc/corpus.hpp"

#include <string>

namespace pidc {

namespace {

Record row(std::initializer_list<int> sources, int target, double mass) {
  Record r;
  for (int s : sources) r.sources.push_back(std::to_string(s));
  r.target = std::to_string(target);
  r.mass = mass;
  return r;
}

JointDistribution from_rows(std::vector<Record> rows) {
  return JointDistribution::load(rows, DistributionOptions{.renormalize = true});
}

JointDistribution rdn() {
  return from_rows({row({0, 0}, 0, 0.5), row({1, 1}, 1, 0.5)});
}

JointDistribution imperfect_rdn() {
  return from_rows({row({0, 0}, 0, 0.49), row({1, 0}, 0, 0.01), row({1, 1}, 1, 0.5)});
}

JointDistribution unq1() {
  return from_rows({row({0, 0}, 0, 0.5), row({1, 0}, 1, 0.5)});
}

JointDistribution unq2() {
  return from_rows({row({0, 0}, 0, 0.5), row({0, 1}, 1, 0.5)});
}

// The four-outcome target where each source resolves one coordinate: the
// first source separates {y1,y2} from {y3,y4}, the second resolves the rest.
JointDistribution unq() {
  std::vector<Record> rows;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      Record r;
      r.sources = {std::to_string(x1), std::to_string(x2)};
      r.target = "y" + std::to_string(2 * x1 + x2 + 1);
      r.mass = 0.25;
      rows.push_back(r);
    }
  return from_rows(std::move(rows));
}

// One masked pair per source, glued at a shared middle value of the other.
JointDistribution syn() {
  return from_rows({row({0, 1}, 0, 0.25), row({1, 1}, 1, 0.25), row({2, 0}, 0, 0.25),
                    row({2, 2}, 1, 0.25)});
}

JointDistribution corner() {
  const double third = 1.0 / 3.0;
  return from_rows({row({0, 1}, 0, third), row({1, 0}, 0, third), row({1, 1}, 1, third)});
}

JointDistribution xor_example() {
  std::vector<Record> rows;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) rows.push_back(row({x1, x2}, x1 ^ x2, 0.25));
  return from_rows(std::move(rows));
}

JointDistribution and_example() {
  std::vector<Record> rows;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) rows.push_back(row({x1, x2}, x1 & x2, 0.25));
  return from_rows(std::move(rows));
}

JointDistribution sum_example() {
  std::vector<Record> rows;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) rows.push_back(row({x1, x2}, x1 + x2, 0.25));
  return from_rows(std::move(rows));
}

// Cyclic bit sharing: each pair of variables shares one bit, nothing is
// shared by all three.
JointDistribution dyadic() {
  std::vector<Record> rows;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        rows.push_back(row({2 * a + b, 2 * c + a}, 2 * b + c, 0.125));
  return from_rows(std::move(rows));
}

// An exclusive-or triple plus one bit carried by everyone.
JointDistribution triadic() {
  std::vector<Record> rows;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        rows.push_back(row({2 * a + b, 2 * c + b}, 2 * (a ^ c) + b, 0.125));
  return from_rows(std::move(rows));
}

// A redundant bit selecting which of two exclusive-or blocks is active.
JointDistribution rdn_xor() {
  std::vector<Record> rows;
  for (int r = 0; r < 2; ++r)
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v)
        rows.push_back(row({2 * r + u, 2 * r + v}, 2 * r + (u ^ v), 0.125));
  return from_rows(std::move(rows));
}

// Product of the redundant-bit, unique-bits and exclusive-or systems; the
// sixteen-symbol target carries one bit of each breakdown term.
JointDistribution rdn_unq_xor() {
  std::vector<Record> rows;
  for (int r = 0; r < 2; ++r)
    for (int u1 = 0; u1 < 2; ++u1)
      for (int u2 = 0; u2 < 2; ++u2)
        for (int s1 = 0; s1 < 2; ++s1)
          for (int s2 = 0; s2 < 2; ++s2)
            rows.push_back(row({4 * r + 2 * u1 + s1, 4 * r + 2 * u2 + s2},
                               8 * r + 4 * u1 + 2 * u2 + (s1 ^ s2), 1.0 / 32.0));
  return from_rows(std::move(rows));
}

// Three variables, pairwise dependent, with nothing shared by all: within
// each half of the outcomes one variable is constant while another resolves
// the half, and the halves themselves are invisible to the first variable.
JointDistribution table2_counterexample() {
  std::vector<Record> rows;
  auto add = [&](int x1, const char* x2, const char* x3, int y) {
    Record r;
    r.sources = {std::to_string(x1), x2, x3};
    r.target = std::to_string(y);
    r.mass = 0.25;
    rows.push_back(r);
  };
  add(0, "0", "1", 0);
  add(1, "0", "-1", 1);
  add(0, "1", "0", 2);
  add(1, "-1", "0", 3);
  return from_rows(std::move(rows));
}

}  // namespace

const std::vector<std::string>& canonical_example_names() {
  static const std::vector<std::string> names = {
      "Rdn",  "ImperfectRdn", "Unq1",    "Unq2",   "Unq",
      "Syn",  "Corner",       "Xor",     "And",    "Sum",
      "Dyadic", "Triadic",    "RdnXor",  "RdnUnqXor", "Table2Counterexample"};
  return names;
}

CanonicalExample canonical_example(std::string_view name) {
  auto make = [&](JointDistribution d,
                  std::optional<ExpectedDecomposition> expected) -> CanonicalExample {
    return {std::string(name), std::move(d), expected};
  };
  if (name == "Rdn") return make(rdn(), ExpectedDecomposition{1, 1, 0, 0, 0});
  if (name == "ImperfectRdn") return make(imperfect_rdn(), ExpectedDecomposition{1, 0.93, 0, 0.07, 0});
  if (name == "Unq1") return make(unq1(), ExpectedDecomposition{1, 0, 1, 0, 0});
  if (name == "Unq2") return make(unq2(), ExpectedDecomposition{1, 0, 0, 1, 0});
  if (name == "Unq") return make(unq(), ExpectedDecomposition{2, 0, 1, 1, 0});
  if (name == "Syn") return make(syn(), ExpectedDecomposition{1, 0.5, 0, 0, 0.5});
  if (name == "Corner") return make(corner(), ExpectedDecomposition{0.92, 0.25, 0, 0, 0.67});
  if (name == "Xor") return make(xor_example(), ExpectedDecomposition{1, 0, 0, 0, 1});
  if (name == "And") return make(and_example(), ExpectedDecomposition{0.81, 0.31, 0, 0, 0.5});
  if (name == "Sum") return make(sum_example(), ExpectedDecomposition{1.5, 0.5, 0, 0, 1});
  if (name == "Dyadic") return make(dyadic(), ExpectedDecomposition{2, 0, 1, 1, 0});
  if (name == "Triadic") return make(triadic(), ExpectedDecomposition{2, 1, 0, 0, 1});
  if (name == "RdnXor") return make(rdn_xor(), ExpectedDecomposition{2, 1, 0, 0, 1});
  if (name == "RdnUnqXor") return make(rdn_unq_xor(), ExpectedDecomposition{4, 1, 1, 1, 1});
  if (name == "Table2Counterexample") return make(table2_counterexample(), std::nullopt);
  raise(errc::unknown_example, "no canonical example named '" + std::string(name) + "'");
}

}  // namespace pidc
