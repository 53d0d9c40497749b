#pragma once
#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphknit/errors.hpp"

namespace graphknit {

using Edge = std::pair<int, int>;  // stored with first < second

// Undirected simple graph over dense node ids 0..n-1. Immutable after
// construction; adjacency lists are sorted and kept consistent with the
// edge set.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edge_list) : n_(n) {
    if (n < 0) throw ValidationError("graph: negative node count");
    for (auto& [u, v] : edge_list) {
      if (u == v)
        throw ValidationError("graph: self-loop at node " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ValidationError("graph: edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") out of range for n=" +
                              std::to_string(n));
      if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()),
                    edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges_) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  void check_node(int v) const {
    if (v < 0 || v >= n_)
      throw ValidationError("graph: node " + std::to_string(v) +
                            " out of range for n=" + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Parses the edge-list text format: one "u v" pair per line, `#` starts a
// comment, blank lines ignored. Node ids are remapped to dense 0..n-1 by
// ascending original id, which makes to_edge_list/from_edge_list a strict
// round trip. Self-loops are rejected; duplicate and reversed duplicate
// lines collapse to one edge.
inline Graph from_edge_list(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::int64_t u, v;
    if (!(ls >> u)) {
      std::string leftover;
      if (ls.clear(), ls >> leftover)
        throw ParseError("edge list line " + std::to_string(line_no) +
                         ": expected two integers");
      continue;  // blank or comment-only line
    }
    if (!(ls >> v))
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": expected two integers");
    std::string trailing;
    if (ls >> trailing)
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": trailing content '" + trailing + "'");
    if (u < 0 || v < 0)
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": negative node id");
    if (u == v)
      throw ValidationError("edge list line " + std::to_string(line_no) +
                            ": self-loop at node " + std::to_string(u));
    raw.emplace_back(u, v);
  }
  std::map<std::int64_t, int> remap;
  for (const auto& [u, v] : raw) {
    remap.emplace(u, 0);
    remap.emplace(v, 0);
  }
  int next = 0;
  for (auto& [id, dense] : remap) dense = next++;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.emplace_back(remap[u], remap[v]);
  return Graph(next, std::move(edges));
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// BFS reachability from node 0.
inline bool is_connected(const Graph& g) {
  const int n = g.node_count();
  if (n < 1) throw ValidationError("is_connected: empty graph");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : g.neighbors(queue[head])) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
        ++reached;
      }
    }
  }
  return reached == n;
}

// Subgraph induced by `nodes`, renumbered densely by ascending original id.
// An edge is kept iff both endpoints are in the set.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes) {
  std::vector<int> sorted(nodes);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> remap(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.node_count())
      throw ValidationError("induced_subgraph: node " +
                            std::to_string(sorted[i]) + " out of range");
    remap[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const int nu = remap[static_cast<std::size_t>(u)];
    const int nv = remap[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

}  // namespace graphknit
