// paradox/graph.hpp -- immutable simple graphs (undirected and directed),
// node attributes, and plain-text ingestion/serialization.
//
// Edge lists are whitespace-separated label pairs, one edge per line.
// '#' starts a comment; blank lines are skipped; tokens beyond the first two
// are ignored. Labels are arbitrary non-whitespace strings. Self-loops are
// rejected and duplicate edges (including reversed duplicates in the
// undirected case) are collapsed. Nodes are the labels that appear in the
// file, densely numbered in lexicographic label order, so any two files
// describing the same labeled graph load identically and serialization
// round-trips exactly.
//
// Attribute files are two-column CSV with the exact header "node,value".
// Every node of the accompanying graph must receive exactly one value.
#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace paradox {

using NodeId = int;

// Raised for malformed or inconsistent input files. Messages carry the
// 1-based line number where applicable.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  // Builds a validated simple graph over nodes 0..n-1. Throws
  // std::invalid_argument on out-of-range endpoints, self-loops or duplicate
  // edges. Labels default to the decimal node ids.
  static Graph from_edges(int n, std::vector<std::pair<NodeId, NodeId>> edges,
                          std::vector<std::string> labels = {}) {
    if (n < 0) throw std::invalid_argument("Graph: negative node count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("Graph: label count does not match node count");
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loop");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("Graph: duplicate edge");
    Graph g;
    g.adj_.resize(n);
    g.edges_ = std::move(edges);
    for (const auto& [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    if (labels.empty()) {
      labels.reserve(n);
      for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    g.labels_ = std::move(labels);
    for (int v = 0; v < n; ++v)
      if (!g.label_to_id_.emplace(g.labels_[v], v).second)
        throw std::invalid_argument("Graph: duplicate node label '" + g.labels_[v] + "'");
    return g;
  }

  [[nodiscard]] int node_count() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] long long edge_count() const { return static_cast<long long>(edges_.size()); }
  [[nodiscard]] int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }
  [[nodiscard]] const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
  [[nodiscard]] const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  [[nodiscard]] const std::string& label(NodeId v) const { return labels_[v]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  [[nodiscard]] NodeId node_by_label(std::string_view name) const {
    auto it = label_to_id_.find(std::string(name));
    if (it == label_to_id_.end())
      throw std::invalid_argument("unknown node label '" + std::string(name) + "'");
    return it->second;
  }

  [[nodiscard]] bool has_label(std::string_view name) const {
    return label_to_id_.count(std::string(name)) != 0;
  }

 private:
  Graph() = default;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_to_id_;
};

class DiGraph {
 public:
  // Arcs are ordered pairs u -> v, read "u follows v": v is a friend
  // (followee) of u and u is a follower of v.
  static DiGraph from_arcs(int n, std::vector<std::pair<NodeId, NodeId>> arcs,
                           std::vector<std::string> labels = {}) {
    if (n < 0) throw std::invalid_argument("DiGraph: negative node count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("DiGraph: label count does not match node count");
    for (const auto& [u, v] : arcs) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("DiGraph: arc endpoint out of range");
      if (u == v) throw std::invalid_argument("DiGraph: self-loop");
    }
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
      throw std::invalid_argument("DiGraph: duplicate arc");
    DiGraph g;
    g.out_.resize(n);
    g.in_.resize(n);
    g.arcs_ = std::move(arcs);
    for (const auto& [u, v] : g.arcs_) {
      g.out_[u].push_back(v);
      g.in_[v].push_back(u);
    }
    for (auto& x : g.out_) std::sort(x.begin(), x.end());
    for (auto& x : g.in_) std::sort(x.begin(), x.end());
    if (labels.empty()) {
      labels.reserve(n);
      for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    g.labels_ = std::move(labels);
    for (int v = 0; v < n; ++v)
      if (!g.label_to_id_.emplace(g.labels_[v], v).second)
        throw std::invalid_argument("DiGraph: duplicate node label '" + g.labels_[v] + "'");
    return g;
  }

  [[nodiscard]] int node_count() const { return static_cast<int>(out_.size()); }
  [[nodiscard]] long long arc_count() const { return static_cast<long long>(arcs_.size()); }
  [[nodiscard]] int out_degree(NodeId v) const { return static_cast<int>(out_[v].size()); }
  [[nodiscard]] int in_degree(NodeId v) const { return static_cast<int>(in_[v].size()); }
  // friends(v): nodes v follows; followers(v): nodes following v.
  [[nodiscard]] const std::vector<NodeId>& friends(NodeId v) const { return out_[v]; }
  [[nodiscard]] const std::vector<NodeId>& followers(NodeId v) const { return in_[v]; }
  [[nodiscard]] const std::vector<std::pair<NodeId, NodeId>>& arcs() const { return arcs_; }
  [[nodiscard]] const std::string& label(NodeId v) const { return labels_[v]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  [[nodiscard]] NodeId node_by_label(std::string_view name) const {
    auto it = label_to_id_.find(std::string(name));
    if (it == label_to_id_.end())
      throw std::invalid_argument("unknown node label '" + std::string(name) + "'");
    return it->second;
  }

 private:
  DiGraph() = default;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<std::pair<NodeId, NodeId>> arcs_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_to_id_;
};

enum class AttrKind { binary, numeric };

// Node attribute vector aligned with graph node ids. kind is binary iff every
// value is exactly 0 or 1.
struct AttributeMap {
  std::vector<double> values;
  AttrKind kind = AttrKind::numeric;

  [[nodiscard]] double operator[](NodeId v) const { return values[v]; }
  [[nodiscard]] int size() const { return static_cast<int>(values.size()); }
  [[nodiscard]] bool is_binary() const { return kind == AttrKind::binary; }
};

inline AttributeMap make_attributes(std::vector<double> values) {
  AttributeMap a;
  a.kind = AttrKind::binary;
  for (double x : values)
    if (x != 0.0 && x != 1.0) {
      a.kind = AttrKind::numeric;
      break;
    }
  a.values = std::move(values);
  return a;
}

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
  const auto pos = line.find('#');
  if (pos != std::string_view::npos) line = line.substr(0, pos);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  return line;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct EdgeListData {
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> pairs;  // directed: as read; undirected: normalized
};

inline EdgeListData read_pairs(std::istream& in, bool directed) {
  EdgeListData data;
  std::unordered_map<std::string, NodeId> ids;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = strip_comment(line);
    const auto tok = split_ws(body);
    if (tok.empty()) continue;
    if (tok.size() < 2)
      throw parse_error("line " + std::to_string(lineno) +
                        ": expected two node labels, got '" + std::string(body) + "'");
    if (tok[0] == tok[1])
      throw parse_error("line " + std::to_string(lineno) + ": self-loop at node '" +
                        std::string(tok[0]) + "'");
    auto intern = [&](std::string_view t) {
      auto [it, inserted] = ids.emplace(std::string(t), static_cast<NodeId>(ids.size()));
      if (inserted) data.labels.push_back(it->first);
      return it->second;
    };
    NodeId u = intern(tok[0]);
    NodeId v = intern(tok[1]);
    if (!directed && u > v) std::swap(u, v);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
        static_cast<std::uint32_t>(v);
    if (seen.insert(key).second) data.pairs.emplace_back(u, v);
  }
  // renumber into lexicographic label order so ids depend only on the
  // labeled graph, never on line order
  const auto n = static_cast<NodeId>(data.labels.size());
  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return data.labels[a] < data.labels[b]; });
  std::vector<NodeId> rank(n);
  for (NodeId i = 0; i < n; ++i) rank[order[i]] = i;
  for (auto& [u, v] : data.pairs) {
    u = rank[u];
    v = rank[v];
    if (!directed && u > v) std::swap(u, v);
  }
  std::vector<std::string> sorted;
  sorted.reserve(n);
  for (NodeId i = 0; i < n; ++i) sorted.push_back(std::move(data.labels[order[i]]));
  data.labels = std::move(sorted);
  return data;
}

}  // namespace detail

inline Graph load_edge_list(std::istream& in) {
  auto data = detail::read_pairs(in, /*directed=*/false);
  const int n = static_cast<int>(data.labels.size());
  return Graph::from_edges(n, std::move(data.pairs), std::move(data.labels));
}

inline DiGraph load_directed_edge_list(std::istream& in) {
  auto data = detail::read_pairs(in, /*directed=*/true);
  const int n = static_cast<int>(data.labels.size());
  return DiGraph::from_arcs(n, std::move(data.pairs), std::move(data.labels));
}

inline Graph load_edge_list(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

inline DiGraph load_directed_edge_list(const std::string& text) {
  std::istringstream in(text);
  return load_directed_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges())
    out << g.label(u) << ' ' << g.label(v) << '\n';
}

inline void write_edge_list(std::ostream& out, const DiGraph& g) {
  for (const auto& [u, v] : g.arcs())
    out << g.label(u) << ' ' << g.label(v) << '\n';
}

// Reads a "node,value" CSV and returns values aligned with g's node ids.
// Unknown labels, duplicates, non-numeric values and missing nodes are
// reported as parse_error.
inline AttributeMap load_attributes(std::istream& in, const Graph& g) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw parse_error("attribute file is empty");
  ++lineno;
  {
    std::string_view h = detail::strip_comment(line);
    if (h != "node,value")
      throw parse_error("line 1: expected header 'node,value', got '" + std::string(h) + "'");
  }
  std::vector<double> values(g.node_count(), 0.0);
  std::vector<bool> present(g.node_count(), false);
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = detail::strip_comment(line);
    if (body.empty()) continue;
    const auto comma = body.find(',');
    if (comma == std::string_view::npos)
      throw parse_error("line " + std::to_string(lineno) + ": expected 'node,value'");
    const std::string name(body.substr(0, comma));
    const std::string_view val = body.substr(comma + 1);
    if (!g.has_label(name))
      throw parse_error("line " + std::to_string(lineno) + ": unknown node label '" +
                        name + "'");
    const NodeId v = g.node_by_label(name);
    if (present[v])
      throw parse_error("line " + std::to_string(lineno) + ": duplicate value for node '" +
                        name + "'");
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), x);
    if (ec != std::errc() || ptr != val.data() + val.size())
      throw parse_error("line " + std::to_string(lineno) + ": non-numeric value '" +
                        std::string(val) + "'");
    values[v] = x;
    present[v] = true;
  }
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!present[v]) throw parse_error("missing attribute for node '" + g.label(v) + "'");
  return make_attributes(std::move(values));
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = g.degree(v);
  return d;
}

}  // namespace paradox
