#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pidc/errors.hpp"
#include "pidc/partition.hpp"

namespace pidc {

using Symbol = std::string;

/// Masses at or below this threshold are treated as exact zeros, so that
/// 0*log(0) never enters a sum.
inline constexpr double kZeroMass = 1e-12;

/// x*log2(x) with the 0*log(0) = 0 convention.
double plogp(double x);

/// Non-empty subset of the source indices {1..N}, stored as a bitmask with
/// bit i-1 standing for source i.
struct SourceSet {
  uint32_t mask = 0;

  static SourceSet of(std::initializer_list<int> indices_1based);
  static SourceSet from_indices(std::span<const int> indices_1based);
  static SourceSet all(int n);

  std::vector<int> indices() const;  // 1-based, ascending
  int count() const;
  bool contains(int index_1based) const;

  bool operator==(const SourceSet&) const = default;
};

/// One outcome of the (possibly coarsened) target, viewed as the subset of
/// target atoms it stands for. Always non-empty.
struct Event {
  std::vector<uint16_t> atoms;
};

struct Record {
  std::vector<Symbol> sources;
  Symbol target;
  double mass = 0.0;
};

struct DistributionOptions {
  bool renormalize = false;
  std::vector<std::string> source_names;                // optional, else x1..xN
  std::vector<std::vector<Symbol>> source_alphabets;    // optional, else inferred (sorted)
  std::vector<Symbol> target_alphabet;                  // optional, else inferred (sorted)
};

/// Exact discrete joint distribution over N source variables and one target.
///
/// The mass table keeps positive-mass outcomes only, sorted by their index
/// tuple, so every downstream sum runs in a fixed order and results are
/// reproducible bit for bit.
class JointDistribution {
 public:
  struct Atom {
    std::vector<uint16_t> src;  // one index per source variable
    uint16_t tgt = 0;
    double mass = 0.0;
  };

  static JointDistribution load(std::span<const Record> records,
                                const DistributionOptions& opts = {});

  int source_count() const { return static_cast<int>(source_alphabets_.size()); }
  const std::vector<std::string>& source_names() const { return source_names_; }
  const std::vector<std::vector<Symbol>>& source_alphabets() const { return source_alphabets_; }
  const std::vector<Symbol>& target_alphabet() const { return target_alphabet_; }
  std::size_t target_size() const { return target_alphabet_.size(); }

  const std::vector<Atom>& atoms() const { return atoms_; }

  /// Marginal mass of one target atom.
  double target_mass(uint16_t atom) const;
  /// Marginal mass of a set of target atoms.
  double event_mass(const Event& event) const;
  /// Target atoms with positive mass, ascending.
  std::vector<uint16_t> target_support() const;

  /// Index of a symbol in the target alphabet, or -1.
  int target_index(const Symbol& s) const;
  /// Index of a symbol in source i's alphabet (0-based source), or -1.
  int source_index(int source, const Symbol& s) const;

 private:
  JointDistribution() = default;

  std::vector<std::string> source_names_;
  std::vector<std::vector<Symbol>> source_alphabets_;
  std::vector<Symbol> target_alphabet_;
  std::vector<Atom> atoms_;
};

/// Selects the variables an information quantity ranges over: any subset of
/// the sources, the target, or both.
struct VariableSelection {
  uint32_t source_mask = 0;
  bool include_target = false;
};

VariableSelection select_sources(SourceSet a);
VariableSelection select_target();

/// Shannon entropy in bits of the selected variables.
double entropy(const JointDistribution& d, const VariableSelection& v);

/// Mutual information in bits between two variable selections. Symmetric by
/// construction: both orders run the same sums.
double mutual_information(const JointDistribution& d, const VariableSelection& a,
                          const VariableSelection& b);

/// I(A; Y) against the target.
double mutual_information(const JointDistribution& d, SourceSet a);

/// I(A; Y^{l-1} | y^l): information between the sources in `a` and the
/// coarsened target given by `previous_level`, on the distribution
/// conditioned on the event.
double conditional_mi_given_event(const JointDistribution& d, SourceSet a,
                                  const Partition& previous_level, const Event& event);

}  // namespace pidc
