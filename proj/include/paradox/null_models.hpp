// paradox/null_models.hpp -- reference models that hold parts of the
// structure fixed while randomizing the rest: configuration-model sampling
// of a degree sequence, degree-preserving rewiring toward a target
// assortativity, and attribute shuffling/placement at a target
// degree-attribute correlation.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "math_util.hpp"
#include "structure.hpp"

namespace paradox {

// Erdos-Gallai test: is the sequence realizable as a simple graph?
inline bool is_graphical(std::vector<int> degrees) {
  long long sum = 0;
  const int n = static_cast<int>(degrees.size());
  for (int d : degrees) {
    if (d < 0 || d >= n) return false;
    sum += d;
  }
  if (sum % 2 != 0) return false;
  std::sort(degrees.begin(), degrees.end(), std::greater<int>());
  std::vector<long long> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + degrees[i];
  for (int k = 1; k <= n; ++k) {
    const long long lhs = prefix[k];
    // among i > k (0-based index >= k), entries with d_i >= k form a prefix
    const auto it = std::partition_point(degrees.begin(), degrees.end(),
                                         [k](int d) { return d >= k; });
    const long long big = std::max<long long>(0, (it - degrees.begin()) - k);
    const long long small_start = std::max<long long>(k, it - degrees.begin());
    const long long rhs = static_cast<long long>(k) * (k - 1) + big * k +
                          (prefix[n] - prefix[small_start]);
    if (lhs > rhs) return false;
  }
  return true;
}

namespace detail {

inline std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace detail

// Samples a uniform-ish simple graph with exactly the given degree sequence:
// random stub matching followed by local repair of self-loops and duplicate
// edges via degree-preserving swaps against randomly chosen good edges. If a
// matching resists repair the whole matching is redrawn. Deterministic for a
// given seed.
inline Graph configuration_model(const std::vector<int>& degrees, std::uint64_t seed) {
  const int n = static_cast<int>(degrees.size());
  if (!is_graphical(degrees))
    throw std::invalid_argument("configuration_model: degree sequence is not graphical");

  std::vector<NodeId> stubs;
  for (NodeId v = 0; v < n; ++v)
    for (int i = 0; i < degrees[v]; ++i) stubs.push_back(v);

  auto rng = substream_rng(seed);
  constexpr int kRestarts = 100;
  constexpr int kTriesPerBad = 2000;

  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);

    std::vector<std::pair<NodeId, NodeId>> good;
    std::vector<std::pair<NodeId, NodeId>> bad;
    std::unordered_set<std::uint64_t> present;
    present.reserve(stubs.size());
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      NodeId u = stubs[i], v = stubs[i + 1];
      if (u == v || !present.insert(detail::edge_key(u, v)).second)
        bad.emplace_back(u, v);
      else
        good.emplace_back(std::min(u, v), std::max(u, v));
    }

    bool failed = false;
    for (const auto& [u, v] : bad) {
      // swap the offending pair against a good edge (x,y): replace (x,y)
      // with (u,x) and (v,y); for a self-loop u == v this splits it into
      // two edges incident to u
      bool repaired = false;
      for (int t = 0; t < kTriesPerBad && !good.empty(); ++t) {
        const std::size_t idx =
            std::uniform_int_distribution<std::size_t>(0, good.size() - 1)(rng);
        auto [x, y] = good[idx];
        if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(x, y);
        if (u == x || u == y || v == x || v == y) continue;
        const std::uint64_t e1 = detail::edge_key(u, x);
        const std::uint64_t e2 = detail::edge_key(v, y);
        if (e1 == e2 || present.count(e1) || present.count(e2)) continue;
        present.erase(detail::edge_key(x, y));
        good[idx] = good.back();
        good.pop_back();
        present.insert(e1);
        good.emplace_back(std::min(u, x), std::max(u, x));
        present.insert(e2);
        good.emplace_back(std::min(v, y), std::max(v, y));
        repaired = true;
        break;
      }
      if (!repaired) {
        failed = true;
        break;
      }
    }
    if (!failed) return Graph::from_edges(n, std::move(good));
  }
  throw std::runtime_error("configuration_model: repair budget exhausted");
}

struct RewireResult {
  Graph graph;
  double target = 0.0;
  std::optional<double> achieved;  // nullopt when assortativity is undefined
  long long iterations_used = 0;
};

// Degree-preserving double-edge swaps accepted whenever they do not move the
// assortativity away from target; stops once within 0.01 of the target or
// when max_iters proposals have been spent. The degree sequence (and hence
// every degree-only statistic) is invariant.
inline RewireResult rewire_to_assortativity(const Graph& g, double target,
                                            long long max_iters, std::uint64_t seed) {
  if (max_iters < 0) throw std::invalid_argument("rewire_to_assortativity: negative budget");
  const int n = g.node_count();
  const long long m = g.edge_count();

  std::vector<long long> deg(n);
  long long sx = 0;
  __int128 sxx = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    sx += deg[v] * deg[v];
    sxx += static_cast<__int128>(deg[v]) * deg[v] * deg[v];
  }
  const __int128 c = 2 * m;
  const __int128 den = c * sxx - static_cast<__int128>(sx) * sx;
  if (m < 2 || den <= 0) {
    // regular graph (or too few edges): assortativity undefined, nothing to do
    return {g, target, std::nullopt, 0};
  }

  auto edges = g.edges();
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size());
  long long sxy = 0;  // sum over edges of d_u * d_v
  for (const auto& [u, v] : edges) {
    present.insert(detail::edge_key(u, v));
    sxy += deg[u] * deg[v];
  }
  auto r_of = [&](long long s) {
    const __int128 num = c * (2 * static_cast<__int128>(s)) -
                         static_cast<__int128>(sx) * sx;
    return static_cast<double>(num) / static_cast<double>(den);
  };

  constexpr double kTol = 0.01;
  double r = r_of(sxy);
  long long used = 0;
  auto rng = substream_rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (; used < max_iters && std::abs(r - target) > kTol; ++used) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [cnode, dnode] = edges[j];
    if (coin(rng)) std::swap(cnode, dnode);
    // propose (a,c),(b,d) in place of (a,b),(c,d)
    if (a == cnode || a == dnode || b == cnode || b == dnode) continue;
    const std::uint64_t e1 = detail::edge_key(a, cnode);
    const std::uint64_t e2 = detail::edge_key(b, dnode);
    if (present.count(e1) || present.count(e2)) continue;
    const long long delta = deg[a] * deg[cnode] + deg[b] * deg[dnode] -
                            deg[a] * deg[b] - deg[cnode] * deg[dnode];
    const double r_new = r_of(sxy + delta);
    if (std::abs(r_new - target) <= std::abs(r - target)) {
      present.erase(detail::edge_key(a, b));
      present.erase(detail::edge_key(cnode, dnode));
      present.insert(e1);
      present.insert(e2);
      edges[i] = {std::min(a, cnode), std::max(a, cnode)};
      edges[j] = {std::min(b, dnode), std::max(b, dnode)};
      sxy += delta;
      r = r_new;
    }
  }
  return {Graph::from_edges(n, std::move(edges), g.labels()), target, r, used};
}

// Uniform random permutation of the attribute values; the value multiset and
// the attribute kind are preserved exactly.
inline AttributeMap shuffle_attributes(const AttributeMap& attrs, std::uint64_t seed) {
  AttributeMap out = attrs;
  auto rng = substream_rng(seed);
  std::shuffle(out.values.begin(), out.values.end(), rng);
  return out;
}

struct PlacedAttributes {
  AttributeMap attributes;
  double achieved = 0.0;  // degree-attribute correlation of the placement
  long long iterations_used = 0;
};

// Places a binary trait of the given prevalence while steering the
// degree-attribute correlation toward target: trait holders start on the
// highest-degree nodes (lowest for negative targets) and single swaps are
// hill-climbed. Targets beyond what the degree sequence admits saturate at
// the best reachable correlation, which is reported.
inline PlacedAttributes place_attributes(const Graph& g, double prevalence,
                                         double target, long long max_iters,
                                         std::uint64_t seed) {
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("place_attributes: need at least two nodes");
  const long long m = std::llround(prevalence * n);
  if (m < 1 || m >= n)
    throw std::invalid_argument(
        "place_attributes: prevalence*n must round into [1, n)");

  std::vector<long long> deg(n);
  long long s1 = 0, s2 = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    s1 += deg[v];
    s2 += deg[v] * deg[v];
  }
  const double mean_d = static_cast<double>(s1) / n;
  const double var_d = static_cast<double>(s2) / n - mean_d * mean_d;
  if (var_d <= 0.0)
    throw std::invalid_argument(
        "place_attributes: degree variance is zero, correlation undefined");
  const double p = static_cast<double>(m) / n;
  const double denom = std::sqrt(var_d) * std::sqrt(p * (1.0 - p));

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&deg](NodeId a, NodeId b) { return deg[a] > deg[b]; });
  if (target < 0.0) std::reverse(order.begin(), order.end());

  std::vector<char> one(n, 0);
  long long sum_deg_ones = 0;
  for (long long i = 0; i < m; ++i) {
    one[order[i]] = 1;
    sum_deg_ones += deg[order[i]];
  }
  auto rho_of = [&](long long s) {
    return (static_cast<double>(s) / n - mean_d * p) / denom;
  };

  std::vector<NodeId> ones, zeros;
  for (NodeId v = 0; v < n; ++v) (one[v] ? ones : zeros).push_back(v);

  constexpr double kTol = 0.02;
  double rho = rho_of(sum_deg_ones);
  long long used = 0;
  auto rng = substream_rng(seed);
  std::uniform_int_distribution<std::size_t> pick_one(0, ones.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_zero(0, zeros.size() - 1);
  for (; used < max_iters && std::abs(rho - target) > kTol; ++used) {
    const std::size_t io = pick_one(rng), iz = pick_zero(rng);
    const long long delta = deg[zeros[iz]] - deg[ones[io]];
    const double rho_new = rho_of(sum_deg_ones + delta);
    if (std::abs(rho_new - target) <= std::abs(rho - target)) {
      std::swap(ones[io], zeros[iz]);
      sum_deg_ones += delta;
      rho = rho_new;
    }
  }

  std::vector<double> vals(n, 0.0);
  for (NodeId v : ones) vals[v] = 1.0;
  return {make_attributes(std::move(vals)), rho, used};
}

}  // namespace paradox
