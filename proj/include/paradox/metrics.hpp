// paradox/metrics.hpp -- friendship-paradox metrics: the canonical gap, the
// generalized (attribute) gap, strong per-node paradoxes, and the four
// directed paradox variants.
//
// Conventions used throughout:
//   * a "random friend" is an edge end drawn uniformly, i.e. a node sampled
//     proportionally to degree, so E{d(Y)} = sum(d^2)/sum(d);
//   * variances and covariances are population quantities (divide by n);
//   * "most neighbors" means a strict majority: more than half, ties lose;
//   * weak dominance compares with >=, strict dominance with >.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "math_util.hpp"

namespace paradox {

enum class SfpMode { weak, strict };

// Network-level friendship paradox gap E{d(Y)} - E{d(X)}, returned twice:
// .first by direct edge-end enumeration, .second via var{d}/E{d}. The two
// agree to floating-point rounding; both are exposed so the identity can be
// checked by callers.
inline std::pair<double, double> fp_gap(const Graph& g) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("fp_gap: empty graph");
  long long s1 = 0, s2 = 0;
  for (NodeId v = 0; v < n; ++v) {
    const long long d = g.degree(v);
    s1 += d;
    s2 += d * d;
  }
  if (s1 == 0) throw std::invalid_argument("fp_gap: graph has no edges");
  const double mean = static_cast<double>(s1) / n;
  const double lhs = static_cast<double>(s2) / static_cast<double>(s1) - mean;
  const double var = static_cast<double>(s2) / n - mean * mean;
  return {lhs, var / mean};
}

// Does v's mean neighbor degree strictly exceed v's own degree?
inline bool fp_indicator(const Graph& g, NodeId v) {
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) return false;
  long long sum = 0;
  for (NodeId j : nbrs) sum += g.degree(j);
  // mean > d  <=>  sum > d * k, kept in integers
  return sum > static_cast<long long>(g.degree(v)) * static_cast<long long>(nbrs.size());
}

// Strong friendship paradox: do most (strict majority) of v's neighbors have
// degree >= v's (weak) or > v's (strict)?
inline bool sfp_indicator(const Graph& g, NodeId v, SfpMode mode = SfpMode::weak) {
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) return false;
  const int d = g.degree(v);
  long long count = 0;
  for (NodeId j : nbrs) {
    const int dj = g.degree(j);
    if (mode == SfpMode::weak ? dj >= d : dj > d) ++count;
  }
  return 2 * count > static_cast<long long>(nbrs.size());
}

inline double sfp_fraction(const Graph& g, SfpMode mode = SfpMode::weak) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("sfp_fraction: empty graph");
  long long hits = 0;
  for (NodeId v = 0; v < n; ++v)
    if (sfp_indicator(g, v, mode)) ++hits;
  return static_cast<double>(hits) / n;
}

struct DegreeGroup {
  double fraction = 0.0;
  int count = 0;
};

// Fraction of degree-k nodes experiencing the strong paradox, for each k
// present in the graph.
inline std::map<int, DegreeGroup> sfp_by_degree(const Graph& g,
                                                SfpMode mode = SfpMode::weak) {
  std::map<int, std::pair<long long, long long>> acc;  // k -> (hits, total)
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto& [hits, total] = acc[g.degree(v)];
    ++total;
    if (sfp_indicator(g, v, mode)) ++hits;
  }
  std::map<int, DegreeGroup> out;
  for (const auto& [k, ht] : acc)
    out[k] = {static_cast<double>(ht.first) / static_cast<double>(ht.second),
              static_cast<int>(ht.second)};
  return out;
}

namespace detail {
inline void check_attrs(const Graph& g, const AttributeMap& a, const char* who) {
  if (a.size() != g.node_count())
    throw std::invalid_argument(std::string(who) + ": attribute size does not match graph");
}
}  // namespace detail

// Generalized friendship paradox gap E{f(Y)} - E{f(X)} for an arbitrary node
// attribute f. .first by edge-end enumeration, .second via cov(f,d)/E{d}.
inline std::pair<double, double> gfp_gap(const Graph& g, const AttributeMap& attrs) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("gfp_gap: empty graph");
  detail::check_attrs(g, attrs, "gfp_gap");
  long long s1 = 0;
  double sdf = 0.0, sf = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const double d = g.degree(v);
    s1 += g.degree(v);
    sdf += d * attrs[v];
    sf += attrs[v];
  }
  if (s1 == 0) throw std::invalid_argument("gfp_gap: graph has no edges");
  const double mean_d = static_cast<double>(s1) / n;
  const double mean_f = sf / n;
  const double lhs = sdf / static_cast<double>(s1) - mean_f;
  const double cov = sdf / n - mean_d * mean_f;
  return {lhs, cov / mean_d};
}

// Mean attribute over v's neighbors strictly exceeds v's own value.
inline bool gfp_indicator(const Graph& g, const AttributeMap& attrs, NodeId v) {
  detail::check_attrs(g, attrs, "gfp_indicator");
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) return false;
  double sum = 0.0;
  for (NodeId j : nbrs) sum += attrs[j];
  return sum > attrs[v] * static_cast<double>(nbrs.size());
}

// Generalized strong paradox: most neighbors weakly (or strictly) dominate
// v's attribute value. With f = degree this coincides with sfp_indicator.
inline bool gsfp_indicator(const Graph& g, const AttributeMap& attrs, NodeId v,
                           SfpMode mode = SfpMode::weak) {
  detail::check_attrs(g, attrs, "gsfp_indicator");
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) return false;
  const double f = attrs[v];
  long long count = 0;
  for (NodeId j : nbrs) {
    const double fj = attrs[j];
    if (mode == SfpMode::weak ? fj >= f : fj > f) ++count;
  }
  return 2 * count > static_cast<long long>(nbrs.size());
}

inline double gsfp_fraction(const Graph& g, const AttributeMap& attrs,
                            SfpMode mode = SfpMode::weak) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("gsfp_fraction: empty graph");
  long long hits = 0;
  for (NodeId v = 0; v < n; ++v)
    if (gsfp_indicator(g, attrs, v, mode)) ++hits;
  return static_cast<double>(hits) / n;
}

struct ParadoxSummary {
  double mean_degree = 0.0;
  double degree_variance = 0.0;
  double friend_mean_degree = 0.0;  // E{d(Y)}
  double fp_gap = 0.0;
  double fp_fraction = 0.0;
  double sfp_fraction_weak = 0.0;
  double sfp_fraction_strict = 0.0;
  std::vector<bool> fp_node;
  std::vector<bool> sfp_weak_node;
  std::vector<bool> sfp_strict_node;
};

inline ParadoxSummary paradox_summary(const Graph& g) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("paradox_summary: empty graph");
  ParadoxSummary s;
  long long s1 = 0, s2 = 0;
  for (NodeId v = 0; v < n; ++v) {
    const long long d = g.degree(v);
    s1 += d;
    s2 += d * d;
  }
  if (s1 == 0) throw std::invalid_argument("paradox_summary: graph has no edges");
  s.mean_degree = static_cast<double>(s1) / n;
  s.degree_variance = static_cast<double>(s2) / n - s.mean_degree * s.mean_degree;
  s.friend_mean_degree = static_cast<double>(s2) / static_cast<double>(s1);
  s.fp_gap = s.friend_mean_degree - s.mean_degree;
  s.fp_node.resize(n);
  s.sfp_weak_node.resize(n);
  s.sfp_strict_node.resize(n);
  long long fp_hits = 0, weak_hits = 0, strict_hits = 0;
  for (NodeId v = 0; v < n; ++v) {
    s.fp_node[v] = fp_indicator(g, v);
    s.sfp_weak_node[v] = sfp_indicator(g, v, SfpMode::weak);
    s.sfp_strict_node[v] = sfp_indicator(g, v, SfpMode::strict);
    fp_hits += s.fp_node[v];
    weak_hits += s.sfp_weak_node[v];
    strict_hits += s.sfp_strict_node[v];
  }
  s.fp_fraction = static_cast<double>(fp_hits) / n;
  s.sfp_fraction_weak = static_cast<double>(weak_hits) / n;
  s.sfp_fraction_strict = static_cast<double>(strict_hits) / n;
  return s;
}

// The four directed paradoxes. With an arc u -> v read "u follows v":
//   friends_followers:   your friends have more followers than you do;
//   followers_friends:   your followers have more friends than you do;
//   friends_friends:     your friends have more friends than you do;
//   followers_followers: your followers have more followers than you do.
// Network gaps compare a random friend/follower (arc end drawn uniformly)
// against a random node; per-node flags compare neighborhood means against
// the node's own count, strictly. Nodes without the relevant neighborhood
// never hold the paradox.
struct DirectedParadoxSummary {
  double gap_friends_followers = 0.0;
  double gap_followers_friends = 0.0;
  double gap_friends_friends = 0.0;
  double gap_followers_followers = 0.0;
  std::vector<bool> node_friends_followers;
  std::vector<bool> node_followers_friends;
  std::vector<bool> node_friends_friends;
  std::vector<bool> node_followers_followers;
  std::optional<double> friend_follower_correlation;  // Pearson of (in, out) over nodes
};

inline DirectedParadoxSummary directed_paradoxes(const DiGraph& g) {
  const int n = g.node_count();
  const long long m = g.arc_count();
  if (n < 1 || m == 0) throw std::invalid_argument("directed_paradoxes: graph has no arcs");

  DirectedParadoxSummary s;
  long long head_in = 0, tail_out = 0, head_out = 0, tail_in = 0;
  for (const auto& [u, v] : g.arcs()) {
    head_in += g.in_degree(v);
    tail_out += g.out_degree(u);
    head_out += g.out_degree(v);
    tail_in += g.in_degree(u);
  }
  const double mean = static_cast<double>(m) / n;  // mean in-degree == mean out-degree
  s.gap_friends_followers = static_cast<double>(head_in) / static_cast<double>(m) - mean;
  s.gap_followers_friends = static_cast<double>(tail_out) / static_cast<double>(m) - mean;
  s.gap_friends_friends = static_cast<double>(head_out) / static_cast<double>(m) - mean;
  s.gap_followers_followers = static_cast<double>(tail_in) / static_cast<double>(m) - mean;

  PearsonIntAccumulator corr;
  for (NodeId v = 0; v < n; ++v) corr.add(g.in_degree(v), g.out_degree(v));
  s.friend_follower_correlation = corr.correlation();

  auto mean_exceeds = [](const std::vector<NodeId>& nbrs, auto deg_of, long long own) {
    if (nbrs.empty()) return false;
    long long sum = 0;
    for (NodeId j : nbrs) sum += deg_of(j);
    return sum > own * static_cast<long long>(nbrs.size());
  };
  auto in_of = [&g](NodeId j) { return g.in_degree(j); };
  auto out_of = [&g](NodeId j) { return g.out_degree(j); };
  s.node_friends_followers.resize(n);
  s.node_followers_friends.resize(n);
  s.node_friends_friends.resize(n);
  s.node_followers_followers.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    s.node_friends_followers[v] = mean_exceeds(g.friends(v), in_of, g.in_degree(v));
    s.node_followers_friends[v] = mean_exceeds(g.followers(v), out_of, g.out_degree(v));
    s.node_friends_friends[v] = mean_exceeds(g.friends(v), out_of, g.out_degree(v));
    s.node_followers_followers[v] = mean_exceeds(g.followers(v), in_of, g.in_degree(v));
  }
  return s;
}

}  // namespace paradox
