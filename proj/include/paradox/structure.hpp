// paradox/structure.hpp -- degree-structure statistics: assortativity,
// transsortativity, degree-attribute correlation, and the empirical degree
// model P(k), P(k'|k) used by the strong-paradox predictor.
//
// All correlations return nullopt when a margin has zero variance (regular
// graphs, constant attributes); that state is reported, never folded into 0.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "math_util.hpp"

namespace paradox {

// Pearson correlation of endpoint degrees over edges, with every edge
// contributing both orientations so the margins are symmetric.
inline std::optional<double> degree_assortativity(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("degree_assortativity: no edges");
  PearsonIntAccumulator acc;
  for (const auto& [u, v] : g.edges()) {
    acc.add(g.degree(u), g.degree(v));
    acc.add(g.degree(v), g.degree(u));
  }
  return acc.correlation();
}

// Correlation between the degrees of two distinct neighbors of the same
// node: Pearson over all ordered pairs (j, l), j != l, of neighbors of every
// node. Positive values mean high-degree nodes share neighborhoods, which is
// what lets strong-paradox rates deviate from the independent-neighbor
// prediction.
inline std::optional<double> transsortativity(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("transsortativity: no edges");
  PearsonIntAccumulator acc;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    const int k = static_cast<int>(nbrs.size());
    if (k < 2) continue;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        if (a == b) continue;
        acc.add(g.degree(nbrs[a]), g.degree(nbrs[b]));
      }
  }
  return acc.correlation();
}

// Pearson correlation between node degree and node attribute.
inline std::optional<double> degree_attribute_correlation(const Graph& g,
                                                          const AttributeMap& attrs) {
  const int n = g.node_count();
  if (attrs.size() != n)
    throw std::invalid_argument("degree_attribute_correlation: attribute size mismatch");
  if (n < 2) return std::nullopt;
  std::vector<double> deg(n);
  for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
  return pearson(deg, attrs.values);
}

// Empirical degree structure of a graph: the degree histogram, the
// conditional neighbor-degree table P(k'|k) over edge ends, and the two
// degree correlations. Enough to reconstruct every quantity the predictor
// needs without the original graph.
struct DegreeModel {
  std::map<int, long long> histogram;                          // k -> node count
  std::map<int, std::vector<std::pair<int, double>>> conditional;  // k -> [(k', P(k'|k))]
  std::optional<double> assortativity;
  std::optional<double> transsortativity;

  [[nodiscard]] long long node_count() const {
    long long n = 0;
    for (const auto& [k, c] : histogram) n += c;
    return n;
  }

  // P(neighbor degree >= k | node degree k) and its strict-dominance variant,
  // the per-neighbor success probabilities of the strong paradox.
  [[nodiscard]] double dominance_probability(int k, bool strict) const {
    const auto it = conditional.find(k);
    if (it == conditional.end())
      throw std::invalid_argument("DegreeModel: no conditional row for degree " +
                                  std::to_string(k));
    double p = 0.0;
    for (const auto& [kp, prob] : it->second)
      if (strict ? kp > k : kp >= k) p += prob;
    return p;
  }
};

inline DegreeModel build_degree_model(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("build_degree_model: no edges");
  DegreeModel model;
  for (NodeId v = 0; v < g.node_count(); ++v) ++model.histogram[g.degree(v)];
  // joint counts over both edge orientations
  std::map<int, std::map<int, long long>> joint;
  for (const auto& [u, v] : g.edges()) {
    ++joint[g.degree(u)][g.degree(v)];
    ++joint[g.degree(v)][g.degree(u)];
  }
  for (const auto& [k, row] : joint) {
    long long total = 0;
    for (const auto& [kp, c] : row) total += c;
    auto& out = model.conditional[k];
    out.reserve(row.size());
    for (const auto& [kp, c] : row)
      out.emplace_back(kp, static_cast<double>(c) / static_cast<double>(total));
  }
  model.assortativity = degree_assortativity(g);
  model.transsortativity = transsortativity(g);
  return model;
}

}  // namespace paradox
