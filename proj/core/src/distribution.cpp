#include "pidc/distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace pidc {

double plogp(double x) { return x > kZeroMass ? x * std::log2(x) : 0.0; }

SourceSet SourceSet::of(std::initializer_list<int> indices_1based) {
  return from_indices(std::span<const int>(indices_1based.begin(), indices_1based.size()));
}

SourceSet SourceSet::from_indices(std::span<const int> indices_1based) {
  SourceSet s;
  for (int i : indices_1based) {
    if (i < 1 || i > 32) raise(errc::invalid_variable_selection, "source index out of range");
    s.mask |= 1u << (i - 1);
  }
  if (s.mask == 0) raise(errc::invalid_variable_selection, "empty source set");
  return s;
}

SourceSet SourceSet::all(int n) {
  if (n < 1 || n > 32) raise(errc::invalid_variable_selection, "source count out of range");
  return SourceSet{(n == 32) ? ~0u : ((1u << n) - 1)};
}

std::vector<int> SourceSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

int SourceSet::count() const { return std::popcount(mask); }

bool SourceSet::contains(int index_1based) const {
  return index_1based >= 1 && index_1based <= 32 && (mask & (1u << (index_1based - 1)));
}

namespace {

std::vector<Symbol> inferred_alphabet(std::span<const Record> records,
                                      const std::function<const Symbol&(const Record&)>& pick) {
  std::set<Symbol> seen;
  for (const auto& r : records) seen.insert(pick(r));
  return {seen.begin(), seen.end()};
}

int index_in(const std::vector<Symbol>& alphabet, const Symbol& s) {
  auto it = std::find(alphabet.begin(), alphabet.end(), s);
  return it == alphabet.end() ? -1 : static_cast<int>(it - alphabet.begin());
}

void check_alphabet(const std::vector<Symbol>& alphabet, const std::string& what) {
  if (alphabet.empty()) raise(errc::empty_alphabet, what + " alphabet is empty");
  std::set<Symbol> seen(alphabet.begin(), alphabet.end());
  if (seen.size() != alphabet.size())
    raise(errc::parse_error, what + " alphabet has duplicate symbols");
}

}  // namespace

JointDistribution JointDistribution::load(std::span<const Record> records,
                                          const DistributionOptions& opts) {
  if (records.empty()) raise(errc::mass_not_normalized, "no records");
  const std::size_t n = records.front().sources.size();
  if (n == 0) raise(errc::invalid_variable_selection, "records carry no source values");
  for (const auto& r : records) {
    if (r.sources.size() != n) raise(errc::parse_error, "records differ in source count");
    if (r.mass < 0.0) raise(errc::negative_mass, "record with negative mass");
  }

  JointDistribution d;
  d.source_alphabets_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < opts.source_alphabets.size() && !opts.source_alphabets[i].empty())
      d.source_alphabets_[i] = opts.source_alphabets[i];
    else
      d.source_alphabets_[i] = inferred_alphabet(
          records, [i](const Record& r) -> const Symbol& { return r.sources[i]; });
    check_alphabet(d.source_alphabets_[i], "source " + std::to_string(i + 1));
  }
  if (!opts.target_alphabet.empty())
    d.target_alphabet_ = opts.target_alphabet;
  else
    d.target_alphabet_ =
        inferred_alphabet(records, [](const Record& r) -> const Symbol& { return r.target; });
  check_alphabet(d.target_alphabet_, "target");

  d.source_names_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    d.source_names_[i] =
        i < opts.source_names.size() ? opts.source_names[i] : "x" + std::to_string(i + 1);

  std::map<std::pair<std::vector<uint16_t>, uint16_t>, double> table;
  double total = 0.0;
  for (const auto& r : records) {
    std::vector<uint16_t> src(n);
    for (std::size_t i = 0; i < n; ++i) {
      int idx = index_in(d.source_alphabets_[i], r.sources[i]);
      if (idx < 0)
        raise(errc::parse_error, "value '" + r.sources[i] + "' outside the declared alphabet of " +
                                     d.source_names_[i]);
      src[i] = static_cast<uint16_t>(idx);
    }
    int tgt = index_in(d.target_alphabet_, r.target);
    if (tgt < 0)
      raise(errc::parse_error, "value '" + r.target + "' outside the declared target alphabet");
    auto key = std::make_pair(std::move(src), static_cast<uint16_t>(tgt));
    if (!table.emplace(key, r.mass).second)
      raise(errc::duplicate_key, "outcome listed more than once");
    total += r.mass;
  }

  if (total <= kZeroMass) raise(errc::mass_not_normalized, "total mass is zero");
  if (!opts.renormalize && std::abs(total - 1.0) > 1e-9)
    raise(errc::mass_not_normalized,
          "masses sum to " + std::to_string(total) + "; pass renormalize to accept");

  for (auto& [key, mass] : table) {
    mass /= total;
    if (mass > kZeroMass) d.atoms_.push_back({key.first, key.second, mass});
  }
  return d;
}

double JointDistribution::target_mass(uint16_t atom) const {
  double m = 0.0;
  for (const auto& a : atoms_)
    if (a.tgt == atom) m += a.mass;
  return m;
}

double JointDistribution::event_mass(const Event& event) const {
  std::vector<char> in(target_alphabet_.size(), 0);
  for (uint16_t atom : event.atoms) in.at(atom) = 1;
  double m = 0.0;
  for (const auto& a : atoms_)
    if (in[a.tgt]) m += a.mass;
  return m;
}

std::vector<uint16_t> JointDistribution::target_support() const {
  std::vector<char> seen(target_alphabet_.size(), 0);
  for (const auto& a : atoms_) seen[a.tgt] = 1;
  std::vector<uint16_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(static_cast<uint16_t>(i));
  return out;
}

int JointDistribution::target_index(const Symbol& s) const { return index_in(target_alphabet_, s); }

int JointDistribution::source_index(int source, const Symbol& s) const {
  return index_in(source_alphabets_.at(source), s);
}

VariableSelection select_sources(SourceSet a) { return {a.mask, false}; }
VariableSelection select_target() { return {0, true}; }

namespace {

void check_selection(const JointDistribution& d, const VariableSelection& v) {
  uint32_t full = d.source_count() == 32 ? ~0u : ((1u << d.source_count()) - 1);
  if ((v.source_mask & ~full) != 0)
    raise(errc::invalid_variable_selection, "source index beyond the distribution's sources");
  if (v.source_mask == 0 && !v.include_target)
    raise(errc::invalid_variable_selection, "empty variable selection");
}

using Key = std::vector<uint16_t>;

Key project(const JointDistribution::Atom& atom, const VariableSelection& v) {
  Key k;
  for (int i = 0; i < 32; ++i)
    if (v.source_mask & (1u << i)) k.push_back(atom.src[i]);
  if (v.include_target) k.push_back(atom.tgt);
  return k;
}

double entropy_of_projection(const JointDistribution& d, const VariableSelection& v) {
  std::map<Key, double> marginal;
  for (const auto& atom : d.atoms()) marginal[project(atom, v)] += atom.mass;
  double h = 0.0;
  for (const auto& [key, mass] : marginal) h -= plogp(mass);
  return h;
}

VariableSelection join(const VariableSelection& a, const VariableSelection& b) {
  return {a.source_mask | b.source_mask, a.include_target || b.include_target};
}

/// Mutual information from an unnormalized contingency table with total mass
/// `total`. Written as entropy sums so that degenerate tables cancel exactly.
double unnormalized_mi(const std::map<std::pair<Key, Key>, double>& joint, double total) {
  std::map<Key, double> left, right;
  double sum_xy = 0.0;
  for (const auto& [key, mass] : joint) {
    left[key.first] += mass;
    right[key.second] += mass;
    sum_xy += plogp(mass);
  }
  double sum_x = 0.0, sum_y = 0.0;
  for (const auto& [k, m] : left) sum_x += plogp(m);
  for (const auto& [k, m] : right) sum_y += plogp(m);
  return (sum_xy - sum_x - sum_y + plogp(total)) / total;
}

}  // namespace

double entropy(const JointDistribution& d, const VariableSelection& v) {
  check_selection(d, v);
  return entropy_of_projection(d, v);
}

double mutual_information(const JointDistribution& d, const VariableSelection& a,
                          const VariableSelection& b) {
  check_selection(d, a);
  check_selection(d, b);
  return entropy_of_projection(d, a) + entropy_of_projection(d, b) -
         entropy_of_projection(d, join(a, b));
}

double mutual_information(const JointDistribution& d, SourceSet a) {
  return mutual_information(d, select_sources(a), select_target());
}

double conditional_mi_given_event(const JointDistribution& d, SourceSet a,
                                  const Partition& previous_level, const Event& event) {
  check_selection(d, select_sources(a));
  if (previous_level.alphabet_size() != d.target_size())
    raise(errc::descriptor_alphabet_mismatch, "partition does not match the target alphabet");
  if (event.atoms.empty()) raise(errc::zero_mass_event, "empty event");
  std::vector<char> in(d.target_size(), 0);
  for (uint16_t atom : event.atoms) {
    if (atom >= d.target_size()) raise(errc::zero_mass_event, "event atom outside the alphabet");
    in[atom] = 1;
  }

  std::map<std::pair<Key, Key>, double> joint;
  double total = 0.0;
  VariableSelection sel = select_sources(a);
  for (const auto& atom : d.atoms()) {
    if (!in[atom.tgt]) continue;
    Key y{previous_level.block_of(atom.tgt)};
    joint[{project(atom, sel), std::move(y)}] += atom.mass;
    total += atom.mass;
  }
  if (total <= kZeroMass) raise(errc::zero_mass_event, "event has zero probability mass");
  return unnormalized_mi(joint, total);
}

}  // namespace pidc
