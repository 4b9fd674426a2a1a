#include "pidc/pid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

namespace pidc {

namespace {

constexpr double kTieEps = 1e-12;

/// Values equal within kTieEps count as ties; ties go to the candidate with
/// the smaller canonical encoding so the result never depends on evaluation
/// order.
struct Extremum {
  bool maximize = false;
  double value = 0.0;
  uint32_t pick = 0;
  bool has = false;

  void offer(double v, uint32_t candidate) {
    if (!has) {
      value = v;
      pick = candidate;
      has = true;
      return;
    }
    bool better = maximize ? v > value + kTieEps : v < value - kTieEps;
    if (better) {
      value = v;
      pick = candidate;
    } else if (std::abs(v - value) <= kTieEps) {
      value = maximize ? std::max(value, v) : std::min(value, v);
      pick = std::min(pick, candidate);
    }
  }
};

uint32_t full_source_mask(const JointDistribution& d) {
  return d.source_count() == 32 ? ~0u : ((1u << d.source_count()) - 1);
}

Antichain checked_collection(const JointDistribution& d, const Antichain& a) {
  if (a.sets.empty()) raise(errc::empty_collection, "empty source collection");
  uint32_t full = full_source_mask(d);
  for (uint32_t m : a.sets)
    if (m == 0 || (m & ~full) != 0)
      raise(errc::invalid_variable_selection, "collection names sources the distribution lacks");
  return normalize_antichain(std::span<const uint32_t>(a.sets));
}

struct Term {
  double weight = 0.0;
  std::vector<double> mi;  // one value per requested mask, same order
};

/// Weights and per-source-set conditional informations for every
/// positive-mass event of the descriptor.
std::vector<Term> descriptor_terms(const JointDistribution& d, const Descriptor& desc,
                                   std::span<const uint32_t> masks) {
  if (desc.alphabet_size() != d.target_size())
    raise(errc::descriptor_alphabet_mismatch, "descriptor does not match the target alphabet");
  std::vector<Term> terms;
  for (std::size_t l = 1; l <= desc.depth(); ++l) {
    for (const auto& block : desc.level(l).blocks()) {
      Event event{block};
      double weight = d.event_mass(event);
      if (weight <= kZeroMass) continue;
      Term t;
      t.weight = weight;
      t.mi.reserve(masks.size());
      for (uint32_t m : masks)
        t.mi.push_back(conditional_mi_given_event(d, SourceSet{m}, desc.level(l - 1), event));
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

double min_over(const Term& t, std::span<const std::size_t> cols) {
  double v = std::numeric_limits<double>::infinity();
  for (std::size_t c : cols) v = std::min(v, t.mi[c]);
  return v;
}

}  // namespace

double shared_given_descriptor(const JointDistribution& d, const Antichain& a,
                               const Descriptor& desc) {
  Antichain coll = checked_collection(d, a);
  auto terms = descriptor_terms(d, desc, coll.sets);
  double total = 0.0;
  for (const auto& t : terms)
    total += t.weight * *std::min_element(t.mi.begin(), t.mi.end());
  return total;
}

double union_given_descriptor(const JointDistribution& d, const Antichain& a,
                              const Descriptor& desc) {
  Antichain coll = checked_collection(d, a);
  auto terms = descriptor_terms(d, desc, coll.sets);
  double total = 0.0;
  for (const auto& t : terms)
    total += t.weight * *std::max_element(t.mi.begin(), t.mi.end());
  return total;
}

namespace {

// ---------------------------------------------------------------------------
// Exact optimization over merge trees.
//
// A single-pair merge chain contributes, per merge of blocks U and V, the
// term p(U|V merged) * extr_k I(A_k; side | y in U+V), and nothing else: all
// untouched events condition the previous level to a constant. The total is
// therefore a sum of independent per-merge costs over the tree's internal
// nodes, and the optimum over all trees is a dynamic program over subsets of
// the positive-mass target symbols:
//
//   D(S) = extr over bipartitions S = U + V of D(U) + D(V) + cost(U,V)
//
// with, writing phi_k(S) = sum_a q_k(S)(a) log2 q_k(S)(a) over the masses
// q_k(S) of source collection element A_k restricted to S, and psi(S) the
// same for the plain event mass,
//
//   cost(U,V) = extr_k [phi_k(U) + phi_k(V) - phi_k(S)]
//               - psi(U) - psi(V) + psi(S).
// ---------------------------------------------------------------------------

struct DpTables {
  std::size_t m = 0;                      // number of support atoms
  std::vector<uint16_t> support;          // ascending target atoms with mass
  std::vector<double> psi;                // 2^m entries
  std::vector<std::vector<double>> phi;   // per collection element
};

DpTables build_tables(const JointDistribution& d, const Antichain& coll,
                      const SearchConfig& cfg) {
  DpTables t;
  t.support = d.target_support();
  t.m = t.support.size();
  if (t.m > cfg.max_alphabet)
    raise(errc::alphabet_too_large,
          "target has " + std::to_string(t.m) + " positive-mass symbols, cap is " +
              std::to_string(cfg.max_alphabet));
  if (t.m > 24) raise(errc::alphabet_too_large, "subset search is limited to 24 symbols");

  std::vector<int> pos(d.target_size(), -1);
  for (std::size_t i = 0; i < t.m; ++i) pos[t.support[i]] = static_cast<int>(i);

  const std::size_t count = std::size_t{1} << t.m;

  std::vector<double> atom_mass(t.m, 0.0);
  for (const auto& a : d.atoms()) atom_mass[static_cast<std::size_t>(pos[a.tgt])] += a.mass;
  t.psi.assign(count, 0.0);
  {
    std::vector<double> mass(count, 0.0);
    for (std::size_t s = 1; s < count; ++s) {
      std::size_t low = s & (~s + 1);
      mass[s] = mass[s ^ low] + atom_mass[static_cast<std::size_t>(std::countr_zero(low))];
      t.psi[s] = plogp(mass[s]);
    }
  }

  t.phi.resize(coll.sets.size());
  for (std::size_t k = 0; k < coll.sets.size(); ++k) {
    // Distinct projections of the source tuple under this mask become columns.
    std::map<std::vector<uint16_t>, std::size_t> cols;
    std::vector<std::pair<std::size_t, std::pair<std::size_t, double>>> entries;  // atom, (col, mass)
    for (const auto& a : d.atoms()) {
      std::vector<uint16_t> key;
      for (int i = 0; i < d.source_count(); ++i)
        if (coll.sets[k] & (1u << i)) key.push_back(a.src[static_cast<std::size_t>(i)]);
      auto [it, inserted] = cols.try_emplace(std::move(key), cols.size());
      entries.push_back({static_cast<std::size_t>(pos[a.tgt]), {it->second, a.mass}});
    }
    const std::size_t c = cols.size();
    std::vector<double> contrib(t.m * c, 0.0);
    for (const auto& [atom, cm] : entries) contrib[atom * c + cm.first] += cm.second;

    std::vector<double> q(count * c, 0.0);
    auto& phi = t.phi[k];
    phi.assign(count, 0.0);
    for (std::size_t s = 1; s < count; ++s) {
      std::size_t low = s & (~s + 1);
      std::size_t atom = static_cast<std::size_t>(std::countr_zero(low));
      const double* prev = &q[(s ^ low) * c];
      const double* add = &contrib[atom * c];
      double* cur = &q[s * c];
      double acc = 0.0;
      for (std::size_t j = 0; j < c; ++j) {
        cur[j] = prev[j] + add[j];
        acc += plogp(cur[j]);
      }
      phi[s] = acc;
    }
  }
  return t;
}

struct DpResult {
  double value = 0.0;
  std::vector<uint32_t> choice;  // winning sub-block per subset
  std::size_t m = 0;
};

void run_range(const DpTables& t, bool maximize, std::span<const uint32_t> subsets,
               std::vector<double>& best, std::vector<uint32_t>& choice) {
  const std::size_t kk = t.phi.size();
  for (uint32_t s : subsets) {
    uint32_t low = s & (~s + 1);
    uint32_t rest = s ^ low;
    Extremum ex{maximize};
    for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
      if (sub != rest) {
        uint32_t u = low | sub;
        uint32_t v = s ^ u;
        Extremum inner{maximize};
        for (std::size_t k = 0; k < kk; ++k)
          inner.offer(t.phi[k][u] + t.phi[k][v] - t.phi[k][s], 0);
        double cost = inner.value - t.psi[u] - t.psi[v] + t.psi[s];
        ex.offer(best[u] + best[v] + cost, u);
      }
      if (sub == 0) break;
    }
    best[s] = ex.value;
    choice[s] = ex.pick;
  }
}

DpResult optimize_over_merge_trees(const DpTables& t, bool maximize, int threads) {
  const std::size_t count = std::size_t{1} << t.m;
  DpResult r;
  r.m = t.m;
  std::vector<double> best(count, 0.0);
  r.choice.assign(count, 0);
  if (t.m < 2) return r;

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  if (threads == 1 || t.m < 12) {
    std::vector<uint32_t> order;
    order.reserve(count);
    for (uint32_t s = 0; s < count; ++s)
      if (std::popcount(s) >= 2) order.push_back(s);
    run_range(t, maximize, order, best, r.choice);
  } else {
    // Subsets of equal size depend only on smaller ones, so each layer can be
    // split across threads; every subset writes its own slot and the outcome
    // is identical for any thread count.
    std::vector<std::vector<uint32_t>> layers(t.m + 1);
    for (uint32_t s = 0; s < count; ++s)
      layers[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    for (std::size_t c = 2; c <= t.m; ++c) {
      const auto& layer = layers[c];
      std::size_t chunk = (layer.size() + static_cast<std::size_t>(threads) - 1) /
                          static_cast<std::size_t>(threads);
      std::vector<std::thread> pool;
      for (std::size_t begin = 0; begin < layer.size(); begin += chunk) {
        std::size_t end = std::min(begin + chunk, layer.size());
        pool.emplace_back([&, begin, end] {
          run_range(t, maximize,
                    std::span<const uint32_t>(layer.data() + begin, end - begin), best,
                    r.choice);
        });
      }
      for (auto& th : pool) th.join();
    }
  }
  r.value = best[count - 1];
  return r;
}

Partition merge_blocks(const Partition& p, uint16_t atom_a, uint16_t atom_b) {
  uint16_t a = p.block_of(atom_a);
  uint16_t b = p.block_of(atom_b);
  std::vector<std::vector<uint16_t>> blocks;
  std::vector<uint16_t> merged = p.block(a);
  merged.insert(merged.end(), p.block(b).begin(), p.block(b).end());
  blocks.push_back(std::move(merged));
  for (std::size_t i = 0; i < p.block_count(); ++i)
    if (i != a && i != b) blocks.push_back(p.block(i));
  return Partition(std::move(blocks), p.alphabet_size());
}

/// Turns the winning bipartition chain into a full-alphabet descriptor.
/// Zero-mass symbols are folded in first; folding them costs nothing since
/// their events never carry weight.
Descriptor materialize_descriptor(const JointDistribution& d, const DpTables& t,
                                  const DpResult& r) {
  const std::size_t n = d.target_size();
  if (n == 1) return Descriptor::shannon(1);

  std::vector<Partition> levels{Partition::discrete(n)};
  Partition current = levels.front();

  std::vector<char> in_support(n, 0);
  for (uint16_t a : t.support) in_support[a] = 1;
  for (uint16_t a = 0; a < n; ++a) {
    if (in_support[a]) continue;
    current = merge_blocks(current, t.support.empty() ? uint16_t(0) : t.support.front(), a);
    levels.push_back(current);
  }
  // With no mass anywhere the fold above already reached the trivial level.
  if (t.m >= 2) {
    struct Merge {
      uint32_t set, left, right;
    };
    std::vector<Merge> merges;
    std::vector<uint32_t> stack{(uint32_t{1} << t.m) - 1};
    while (!stack.empty()) {
      uint32_t s = stack.back();
      stack.pop_back();
      if (std::popcount(s) < 2) continue;
      uint32_t u = r.choice[s];
      uint32_t v = s ^ u;
      merges.push_back({s, u, v});
      stack.push_back(u);
      stack.push_back(v);
    }
    std::vector<char> done(merges.size(), 0);
    auto block_ready = [&](uint32_t set) {
      if (std::popcount(set) < 2) return true;
      for (std::size_t i = 0; i < merges.size(); ++i)
        if (merges[i].set == set) return done[i] == 1;
      return false;
    };
    for (std::size_t step = 0; step < merges.size(); ++step) {
      int pick = -1;
      uint32_t pick_min = UINT32_MAX;
      for (std::size_t i = 0; i < merges.size(); ++i) {
        if (done[i] || !block_ready(merges[i].left) || !block_ready(merges[i].right)) continue;
        uint32_t m = static_cast<uint32_t>(std::countr_zero(merges[i].set));
        if (m < pick_min) {
          pick_min = m;
          pick = static_cast<int>(i);
        }
      }
      const Merge& mg = merges[static_cast<std::size_t>(pick)];
      uint16_t a = t.support[static_cast<std::size_t>(std::countr_zero(mg.left))];
      uint16_t b = t.support[static_cast<std::size_t>(std::countr_zero(mg.right))];
      current = merge_blocks(current, a, b);
      levels.push_back(current);
      done[static_cast<std::size_t>(pick)] = 1;
    }
  }
  return Descriptor::validate(std::move(levels));
}

MeasureResult optimize(const JointDistribution& d, const Antichain& a, const SearchConfig& cfg,
                       bool maximize) {
  Antichain coll = checked_collection(d, a);
  DpTables tables = build_tables(d, coll, cfg);
  DpResult dp = optimize_over_merge_trees(tables, maximize, cfg.threads);
  MeasureResult out;
  out.value = dp.value;
  if (!maximize && out.value < 0.0 && out.value > -1e-9) out.value = 0.0;  // rounding noise
  out.descriptor = materialize_descriptor(d, tables, dp);
  return out;
}

}  // namespace

MeasureResult shared_info(const JointDistribution& d, const Antichain& a,
                          const SearchConfig& cfg) {
  return optimize(d, a, cfg, false);
}

MeasureResult union_info(const JointDistribution& d, const Antichain& a, const SearchConfig& cfg) {
  return optimize(d, a, cfg, true);
}

namespace {

std::vector<uint32_t> all_masks(int n) {
  std::vector<uint32_t> masks;
  for (uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
  return masks;
}

std::vector<std::vector<std::size_t>> node_columns(const RedundancyLattice& lattice) {
  // Mask m sits at column m-1 of the term table built over all_masks.
  std::vector<std::vector<std::size_t>> cols(lattice.nodes().size());
  for (std::size_t i = 0; i < lattice.nodes().size(); ++i)
    for (uint32_t m : lattice.node(static_cast<int>(i)).sets)
      cols[i].push_back(m - 1);
  return cols;
}

}  // namespace

PiFunction pi_closed_form(const JointDistribution& d, const Descriptor& desc,
                          const RedundancyLattice& lattice) {
  if (lattice.source_count() != d.source_count())
    raise(errc::node_not_in_lattice, "lattice built for a different source count");
  auto masks = all_masks(d.source_count());
  auto terms = descriptor_terms(d, desc, masks);
  auto cols = node_columns(lattice);

  PiFunction mu;
  for (std::size_t i = 0; i < lattice.nodes().size(); ++i) {
    double value = 0.0;
    for (const auto& t : terms) {
      double own = min_over(t, cols[i]);
      double below = 0.0;
      for (int b : lattice.strict_down_set(static_cast<int>(i)))
        below = std::max(below, min_over(t, cols[static_cast<std::size_t>(b)]));
      value += t.weight * (own - below);
    }
    mu[lattice.node(static_cast<int>(i))] = value;
  }
  return mu;
}

PiFunction pi_mobius(const JointDistribution& d, const Descriptor& desc,
                     const RedundancyLattice& lattice) {
  if (lattice.source_count() != d.source_count())
    raise(errc::node_not_in_lattice, "lattice built for a different source count");
  auto masks = all_masks(d.source_count());
  auto terms = descriptor_terms(d, desc, masks);
  auto cols = node_columns(lattice);

  const std::size_t count = lattice.nodes().size();
  std::vector<double> base(count, 0.0);
  for (std::size_t i = 0; i < count; ++i)
    for (const auto& t : terms) base[i] += t.weight * min_over(t, cols[i]);

  // beta < alpha implies a strictly smaller down-set, so down-set size gives
  // a valid processing order.
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice.strict_down_set(static_cast<int>(a)).size() <
           lattice.strict_down_set(static_cast<int>(b)).size();
  });

  std::vector<double> mu_by_index(count, 0.0);
  for (std::size_t i : order) {
    double below = 0.0;
    for (int b : lattice.strict_down_set(static_cast<int>(i)))
      below += mu_by_index[static_cast<std::size_t>(b)];
    mu_by_index[i] = base[i] - below;
  }

  PiFunction mu;
  for (std::size_t i = 0; i < count; ++i) mu[lattice.node(static_cast<int>(i))] = mu_by_index[i];
  return mu;
}

namespace {

double clamp_mu(double v) { return (v < 0.0 && v >= -1e-9) ? 0.0 : v; }

}  // namespace

DecompositionResult decompose_two_sources(const JointDistribution& d, const SearchConfig& cfg) {
  if (d.source_count() != 2)
    raise(errc::not_two_sources,
          "two-source decomposition needs exactly 2 sources, got " +
              std::to_string(d.source_count()));

  Antichain bottom{{1u, 2u}};
  DecompositionResult out;
  MeasureResult sh = shared_info(d, bottom, cfg);
  MeasureResult un = union_info(d, bottom, cfg);
  out.shared = sh.value;
  out.union_value = un.value;
  out.minimizing_descriptor = sh.descriptor;
  out.total = mutual_information(d, SourceSet::all(2));

  RedundancyLattice lattice = RedundancyLattice::build(2);
  out.raw_mu = pi_closed_form(d, sh.descriptor, lattice);
  out.redundant = clamp_mu(out.raw_mu.at(Antichain{{1u, 2u}}));
  out.unique1 = clamp_mu(out.raw_mu.at(Antichain{{1u}}));
  out.unique2 = clamp_mu(out.raw_mu.at(Antichain{{2u}}));
  out.synergy = clamp_mu(out.raw_mu.at(Antichain{{3u}}));
  return out;
}

}  // namespace pidc
