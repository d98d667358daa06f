// paradox/perception.hpp -- what nodes see locally: perception bias of a
// binary trait, the majority illusion, a search for illusion-maximizing trait
// placements, and threshold cascades seeded by them.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "math_util.hpp"
#include "metrics.hpp"

namespace paradox {

namespace detail {
inline void require_binary(const Graph& g, const AttributeMap& a, const char* who) {
  if (a.size() != g.node_count())
    throw std::invalid_argument(std::string(who) + ": attribute size does not match graph");
  if (!a.is_binary())
    throw std::invalid_argument(std::string(who) + ": attribute must be binary");
}
}  // namespace detail

// Prevalence of the trait among a random node's friends minus the true
// prevalence: E{f(Y)} - E{f(X)}. This is the generalized paradox gap
// specialized to a binary trait, and is computed by the same code path.
inline double global_perception_bias(const Graph& g, const AttributeMap& attrs) {
  detail::require_binary(g, attrs, "global_perception_bias");
  return gfp_gap(g, attrs).first;
}

// Fraction of v's neighbors holding the trait.
inline double local_perception(const Graph& g, const AttributeMap& attrs, NodeId v) {
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) return 0.0;
  double ones = 0.0;
  for (NodeId j : nbrs) ones += attrs[j];
  return ones / static_cast<double>(nbrs.size());
}

// Mean over nodes of the locally observed trait prevalence, minus the true
// prevalence. Unlike the global bias this weights every observer equally.
inline double local_perception_bias(const Graph& g, const AttributeMap& attrs) {
  detail::require_binary(g, attrs, "local_perception_bias");
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("local_perception_bias: empty graph");
  double sum = 0.0, sf = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    sum += local_perception(g, attrs, v);
    sf += attrs[v];
  }
  return sum / n - sf / n;
}

struct IllusionReport {
  double global_prevalence = 0.0;
  double perceived_global = 0.0;  // E{f(Y)}, trait prevalence among random friends
  double global_bias = 0.0;
  double local_bias = 0.0;
  double illusion_fraction = 0.0;
  std::vector<double> per_node_local_perception;
};

// Majority illusion: the share of trait-less nodes that nevertheless see the
// trait at local prevalence >= threshold. With count_all_nodes the
// denominator and numerator include trait holders as well.
inline IllusionReport majority_illusion(const Graph& g, const AttributeMap& attrs,
                                        double threshold = 0.5,
                                        bool count_all_nodes = false) {
  detail::require_binary(g, attrs, "majority_illusion");
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("majority_illusion: threshold must be in (0,1]");
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("majority_illusion: empty graph");

  IllusionReport r;
  r.per_node_local_perception.resize(n);
  double sf = 0.0, sdf = 0.0, local_sum = 0.0;
  long long s1 = 0;
  long long illusioned = 0, eligible = 0;
  for (NodeId v = 0; v < n; ++v) {
    const double p = local_perception(g, attrs, v);
    r.per_node_local_perception[v] = p;
    local_sum += p;
    sf += attrs[v];
    sdf += attrs[v] * g.degree(v);
    s1 += g.degree(v);
    if (count_all_nodes || attrs[v] == 0.0) {
      ++eligible;
      if (p >= threshold) ++illusioned;
    }
  }
  r.global_prevalence = sf / n;
  r.perceived_global = s1 > 0 ? sdf / static_cast<double>(s1) : 0.0;
  r.global_bias = r.perceived_global - r.global_prevalence;
  r.local_bias = local_sum / n - r.global_prevalence;
  r.illusion_fraction =
      eligible > 0 ? static_cast<double>(illusioned) / static_cast<double>(eligible) : 0.0;
  return r;
}

struct IllusionSearchResult {
  std::vector<NodeId> red;       // sorted trait-holder ids
  double fraction = 0.0;         // majority_illusion fraction of the returned set
  long long iterations_used = 0;
};

// Searches for a size-set_size trait placement maximizing the majority
// illusion: greedy seeding on the highest-degree nodes, then single-swap
// hill climbing for up to budget proposals. Swaps that tie the incumbent
// objective are accepted, which lets the walk drift across plateaus.
// Deterministic for a given seed.
inline IllusionSearchResult illusion_search(const Graph& g, int set_size,
                                            double threshold, long long budget,
                                            std::uint64_t seed) {
  const int n = g.node_count();
  if (set_size < 1 || set_size >= n)
    throw std::invalid_argument("illusion_search: set size must be in [1, n)");
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("illusion_search: threshold must be in (0,1]");
  if (budget < 1) throw std::invalid_argument("illusion_search: budget must be >= 1");

  // nodes sorted by degree descending, ties by id, for the greedy seed
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&g](NodeId a, NodeId b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<char> red(n, 0);
  for (int i = 0; i < set_size; ++i) red[order[i]] = 1;

  // red_nbrs[v]: count of trait-holding neighbors, maintained across swaps
  std::vector<int> red_nbrs(n, 0);
  for (NodeId v = 0; v < n; ++v)
    if (red[v])
      for (NodeId j : g.neighbors(v)) ++red_nbrs[j];

  // objective: (illusioned count, sum of capped perception ratios); the
  // second term rewards progress toward the threshold on non-illusioned nodes
  auto evaluate = [&]() {
    long long count = 0;
    double shaped = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (red[v]) continue;
      const int k = g.degree(v);
      if (k == 0) continue;
      const double p = static_cast<double>(red_nbrs[v]) / k;
      if (p >= threshold) ++count;
      shaped += std::min(p / threshold, 1.0);
    }
    return std::pair<long long, double>(count, shaped);
  };

  auto apply = [&](NodeId v, int delta) {
    red[v] = delta > 0;
    for (NodeId j : g.neighbors(v)) red_nbrs[j] += delta;
  };

  std::vector<NodeId> reds, whites;
  auto rebuild_lists = [&]() {
    reds.clear();
    whites.clear();
    for (NodeId v = 0; v < n; ++v) (red[v] ? reds : whites).push_back(v);
  };
  rebuild_lists();

  auto rng = substream_rng(seed);
  auto best = evaluate();
  long long used = 0;
  for (; used < budget; ++used) {
    const NodeId out = reds[std::uniform_int_distribution<std::size_t>(0, reds.size() - 1)(rng)];
    const NodeId in = whites[std::uniform_int_distribution<std::size_t>(0, whites.size() - 1)(rng)];
    apply(out, -1);
    apply(in, +1);
    const auto cand = evaluate();
    if (cand >= best) {
      best = cand;
      rebuild_lists();
    } else {
      apply(in, -1);
      apply(out, +1);
    }
  }

  IllusionSearchResult res;
  res.iterations_used = used;
  for (NodeId v = 0; v < n; ++v)
    if (red[v]) res.red.push_back(v);
  std::vector<double> vals(n, 0.0);
  for (NodeId v : res.red) vals[v] = 1.0;
  res.fraction = majority_illusion(g, make_attributes(std::move(vals)), threshold)
                     .illusion_fraction;
  return res;
}

struct CascadeResult {
  std::vector<bool> active;
  int rounds = 0;                 // rounds in which at least one node activated
  long long final_size = 0;
  std::vector<long long> round_sizes;  // cumulative active count; index 0 = seeds
};

// Synchronous threshold cascade: in each round every inactive node whose
// active-neighbor fraction is >= phi activates. Activation is permanent, so
// the process is monotone and stops within n rounds.
inline CascadeResult threshold_cascade(const Graph& g, const std::vector<NodeId>& seeds,
                                       double phi) {
  const int n = g.node_count();
  if (seeds.empty()) throw std::invalid_argument("threshold_cascade: empty seed set");
  if (!(phi > 0.0 && phi <= 1.0))
    throw std::invalid_argument("threshold_cascade: phi must be in (0,1]");

  CascadeResult r;
  r.active.assign(n, false);
  for (NodeId v : seeds) {
    if (v < 0 || v >= n) throw std::invalid_argument("threshold_cascade: seed out of range");
    r.active[v] = true;
  }
  long long active_count = static_cast<long long>(
      std::count(r.active.begin(), r.active.end(), true));
  r.round_sizes.push_back(active_count);

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<NodeId> newly;
    for (NodeId v = 0; v < n; ++v) {
      if (r.active[v]) continue;
      const auto& nbrs = g.neighbors(v);
      if (nbrs.empty()) continue;
      int on = 0;
      for (NodeId j : nbrs) on += r.active[j];
      if (static_cast<double>(on) / static_cast<double>(nbrs.size()) >= phi)
        newly.push_back(v);
    }
    if (!newly.empty()) {
      for (NodeId v : newly) r.active[v] = true;
      active_count += static_cast<long long>(newly.size());
      r.round_sizes.push_back(active_count);
      ++r.rounds;
      changed = true;
    }
  }
  r.final_size = active_count;
  return r;
}

}  // namespace paradox
